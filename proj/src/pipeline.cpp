#include "arseg/pipeline.hpp"

#include "arseg/errors.hpp"
#include "arseg/version.hpp"
#include "arseg/word_seg.hpp"

#include <algorithm>
#include <cmath>

namespace arseg {
namespace {

int resolve_word_gap(const PageConfig& cfg, int line_height) {
    if (cfg.word_gap >= 0)
        return cfg.word_gap;
    return std::max(1, static_cast<int>(std::lround(0.3 * line_height)));
}

} // namespace

SegmentTree segment_page(const GrayImage& page, const PageConfig& cfg,
                         const std::string& source) {
    const int threshold =
        cfg.use_otsu ? otsu_threshold(page) : cfg.binarize_threshold;
    const InkImage ink = binarize(page, threshold);

    SegmentTree tree;
    tree.width = page.width;
    tree.height = page.height;
    tree.source = source;
    tree.config = cfg;
    tree.version = kVersion;

    for (const LineSegment& line : segment_lines(ink, cfg.line)) {
        LineEntry le;
        le.y_band = line.y_band;
        le.baseline = {line.baseline.peak_row + line.y_band.start,
                       line.baseline.top + line.y_band.start,
                       line.baseline.bottom + line.y_band.start};

        const int gap = resolve_word_gap(cfg, line.y_band.width());
        const auto parts = connected_parts(line.image);
        for (const WordCluster& cluster : cluster_words(parts, gap)) {
            WordEntry we;
            we.x_band = cluster.x_band;
            for (const auto& part : cluster.parts)
                we.parts.push_back(part.x_band);

            const InkImage word = crop(line.image, cluster.x_band,
                                       {0, line.image.height - 1});
            for (const CharBox& cb :
                 segment_characters(word, line.baseline, cfg.chars)) {
                CharEntry ce;
                ce.x_band = {cb.x_band.start + cluster.x_band.start,
                             cb.x_band.end + cluster.x_band.start};
                ce.box = cb.box;
                ce.cut_left = cb.cut_left;
                ce.cut_right = cb.cut_right;
                we.chars.push_back(std::move(ce));
            }
            le.words.push_back(std::move(we));
        }

        if (cfg.reading_order == "rtl") {
            std::reverse(le.words.begin(), le.words.end());
            for (auto& we : le.words) {
                std::reverse(we.parts.begin(), we.parts.end());
                std::reverse(we.chars.begin(), we.chars.end());
            }
        }
        tree.lines.push_back(std::move(le));
    }
    return tree;
}

namespace {

void check_dims(const GrayImage& page, const SegmentTree& tree) {
    if (tree.width != page.width || tree.height != page.height)
        throw DimensionMismatch("overlay: tree is for a " +
                                std::to_string(tree.width) + "x" +
                                std::to_string(tree.height) + " page, image is " +
                                std::to_string(page.width) + "x" +
                                std::to_string(page.height));
}

// Markers recolor background pixels only, so ink stays legible and a marker
// over an all-ink region is a no-op.
template <typename Paint>
void draw_markers(const GrayImage& page, const SegmentTree& tree,
                  Paint&& paint) {
    const int w = page.width;
    const int h = page.height;
    auto mark = [&](int x, int y, int kind) {
        if (x < 0 || x >= w || y < 0 || y >= h)
            return;
        if (page.at(x, y) >= 128)
            paint(x, y, kind);
    };
    for (const auto& line : tree.lines)
        for (int x = 0; x < w; ++x) {
            mark(x, line.y_band.start, 0);
            mark(x, line.y_band.end, 0);
        }
    for (const auto& line : tree.lines)
        for (int y = line.baseline.top; y <= line.baseline.bottom; ++y)
            for (int x = 0; x < w; ++x)
                mark(x, y, 1);
    for (const auto& line : tree.lines)
        for (const auto& word : line.words)
            for (const auto& ch : word.chars) {
                if (ch.cut_left == "word-edge")
                    continue;
                for (int y = line.y_band.start; y <= line.y_band.end; ++y)
                    mark(ch.x_band.start, y, 2);
            }
}

} // namespace

GrayImage render_overlay_gray(const GrayImage& page, const SegmentTree& tree) {
    check_dims(page, tree);
    GrayImage out = page;
    static constexpr std::uint8_t kGray[3] = {176, 144, 64};
    draw_markers(page, tree,
                 [&](int x, int y, int kind) { out.set(x, y, kGray[kind]); });
    return out;
}

RgbImage render_overlay_rgb(const GrayImage& page, const SegmentTree& tree) {
    check_dims(page, tree);
    RgbImage out(page.width, page.height);
    for (int y = 0; y < page.height; ++y)
        for (int x = 0; x < page.width; ++x) {
            const std::uint8_t g = page.at(x, y);
            out.set(x, y, g, g, g);
        }
    static constexpr std::uint8_t kColor[3][3] = {
        {80, 80, 220}, {220, 60, 60}, {40, 180, 40}};
    draw_markers(page, tree, [&](int x, int y, int kind) {
        out.set(x, y, kColor[kind][0], kColor[kind][1], kColor[kind][2]);
    });
    return out;
}

} // namespace arseg
