#pragma once

#include <vector>

#include "arseg/geometry.hpp"
#include "arseg/raster.hpp"

namespace arseg {

/// Maximal run of non-blank columns in a line, cropped at full line height.
struct ConnectedPart {
    Band x_band; // line columns
    InkImage image;
};

struct WordCluster {
    std::vector<ConnectedPart> parts; // consecutive, in line order
    Band x_band;                      // spans all member parts
};

/// Parts left to right. A blank line yields an empty list.
std::vector<ConnectedPart> connected_parts(const InkImage& line);

/// Consecutive parts whose gap (next.start - prev.end - 1) is below
/// gap_threshold share a cluster. Parts must be sorted by x_band.start.
std::vector<WordCluster> cluster_words(const std::vector<ConnectedPart>& parts,
                                       int gap_threshold);

} // namespace arseg
