#pragma once

#include <string>
#include <vector>

#include "arseg/char_seg.hpp"
#include "arseg/geometry.hpp"
#include "arseg/line_seg.hpp"
#include "arseg/raster.hpp"

namespace arseg {

struct PageConfig {
    int binarize_threshold = 128;
    bool use_otsu = false;
    LineConfig line;
    /// Word-gap threshold in columns. Negative means auto:
    /// max(1, round(0.3 * line height)).
    int word_gap = -1;
    CharConfig chars;
    /// "image" keeps left-to-right image order; "rtl" reverses words and
    /// characters into reading order at emission time.
    std::string reading_order = "image";
};

struct CharEntry {
    Band x_band; // page columns
    Rect box;    // page coordinates, ink-tight
    std::string cut_left;
    std::string cut_right;
};

struct WordEntry {
    Band x_band;             // page columns
    std::vector<Band> parts; // page columns
    std::vector<CharEntry> chars;
};

struct LineEntry {
    Band y_band;           // page rows
    BaselineBand baseline; // page rows
    std::vector<WordEntry> words;
};

/// Page -> lines -> word clusters -> character boxes, with the config
/// snapshot that produced it. Serializes to the stable JSON schema.
struct SegmentTree {
    int width = 0;
    int height = 0;
    std::string source;
    std::vector<LineEntry> lines;
    PageConfig config;
    std::string version;
};

/// End-to-end segmentation. Deterministic for fixed pixels and config.
SegmentTree segment_page(const GrayImage& page, const PageConfig& cfg = {},
                         const std::string& source = "");

/// Overlay rendering: line band boundary rows, baseline band rows and
/// character cut columns, recoloring background pixels only. Throws
/// DimensionMismatch when the tree does not match the image.
GrayImage render_overlay_gray(const GrayImage& page, const SegmentTree& tree);
RgbImage render_overlay_rgb(const GrayImage& page, const SegmentTree& tree);

} // namespace arseg
