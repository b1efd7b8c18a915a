#include <doctest.h>

#include <array>

#include "arseg/errors.hpp"
#include "arseg/pipeline.hpp"
#include "fixtures.hpp"

using namespace arseg;

namespace {

/// Bridge-word page drawn in gray: two blocks on rows [2,17] joined by a
/// bridge on rows [12,13]. Segmenting it cuts at column 12.
GrayImage bridge_page() {
    GrayImage img(24, 20, 255);
    auto fill = [&](int x0, int y0, int x1, int y1) {
        for (int y = y0; y <= y1; ++y)
            for (int x = x0; x <= x1; ++x)
                img.set(x, y, 0);
    };
    fill(0, 2, 9, 17);
    fill(14, 2, 23, 17);
    fill(10, 12, 13, 13);
    return img;
}

PageConfig bridge_config() {
    PageConfig cfg;
    cfg.line.beta = 0.9;
    cfg.chars.epsilon = 0;
    cfg.chars.min_len = 2;
    return cfg;
}

} // namespace

TEST_CASE("overlay of an empty tree is the identity") {
    const GrayImage page(16, 12, 255);
    const SegmentTree tree = segment_page(page);
    CHECK(render_overlay_gray(page, tree).pixels == page.pixels);
}

TEST_CASE("overlay marks boundaries, baseline and cuts on background only") {
    const GrayImage page = bridge_page();
    const SegmentTree tree = segment_page(page, bridge_config());
    REQUIRE(tree.lines.size() == 1);
    REQUIRE(tree.lines[0].baseline.top == 12);
    REQUIRE(tree.lines[0].baseline.bottom == 13);
    REQUIRE(tree.lines[0].words.size() == 1);
    REQUIRE(tree.lines[0].words[0].chars.size() == 2);
    REQUIRE(tree.lines[0].words[0].chars[1].x_band.start == 12);

    const GrayImage out = render_overlay_gray(page, tree);
    // line boundary rows, background pixels only
    CHECK(out.at(10, 2) == 176);
    CHECK(out.at(11, 17) == 176);
    CHECK(out.at(0, 2) == 0);  // ink stays ink
    CHECK(out.at(0, 17) == 0);
    // baseline rows are fully inked here, so nothing changes
    CHECK(out.at(5, 12) == 0);
    CHECK(out.at(10, 13) == 0);
    // cut column over the line rows; it wins over the boundary marker
    CHECK(out.at(12, 5) == 64);
    CHECK(out.at(12, 16) == 64);
    CHECK(out.at(12, 2) == 64);
    CHECK(out.at(12, 12) == 0); // bridge ink under the cut
    // untouched background outside the line band
    CHECK(out.at(12, 0) == 255);
    CHECK(out.at(3, 19) == 255);
    // word-edge boundaries draw no cut
    CHECK(out.at(0, 5) == 0);
    CHECK(out.at(23, 5) == 0);
}

TEST_CASE("rgb overlay colors the same pixels") {
    const GrayImage page = bridge_page();
    const SegmentTree tree = segment_page(page, bridge_config());
    const RgbImage out = render_overlay_rgb(page, tree);
    auto px = [&](int x, int y) {
        const auto i = (static_cast<std::size_t>(y) * out.width + x) * 3;
        return std::array<std::uint8_t, 3>{out.rgb[i], out.rgb[i + 1],
                                           out.rgb[i + 2]};
    };
    CHECK(px(10, 2) == std::array<std::uint8_t, 3>{80, 80, 220});
    CHECK(px(12, 5) == std::array<std::uint8_t, 3>{40, 180, 40});
    CHECK(px(0, 2) == std::array<std::uint8_t, 3>{0, 0, 0});
    CHECK(px(12, 0) == std::array<std::uint8_t, 3>{255, 255, 255});
}

TEST_CASE("a baseline marker shows on background inside the band") {
    // lighter line: blocks do not cover the band rows at every column, so
    // baseline marks appear in the gaps
    GrayImage page(20, 12, 255);
    for (int y = 3; y <= 8; ++y)
        for (int x = 0; x <= 7; ++x)
            page.set(x, y, 0);
    for (int y = 3; y <= 8; ++y)
        for (int x = 12; x <= 19; ++x)
            page.set(x, y, 0);
    PageConfig cfg;
    cfg.word_gap = 10; // keep the blocks in one word, no cut candidates
    cfg.chars.min_len = 9;
    const SegmentTree tree = segment_page(page, cfg);
    REQUIRE(tree.lines.size() == 1);
    const auto& bl = tree.lines[0].baseline;
    REQUIRE(bl.top == 3);
    REQUIRE(bl.bottom == 8);

    const GrayImage out = render_overlay_gray(page, tree);
    CHECK(out.at(9, 5) == 144);  // band row, background column
    CHECK(out.at(9, 3) == 144);  // band beats the boundary marker
    CHECK(out.at(4, 5) == 0);
    CHECK(out.at(9, 10) == 255);
}

TEST_CASE("overlay rejects a tree for another page size") {
    const GrayImage page(16, 12, 255);
    SegmentTree tree = segment_page(page);
    tree.width = 17;
    CHECK_THROWS_AS(render_overlay_gray(page, tree), DimensionMismatch);
    CHECK_THROWS_AS(render_overlay_rgb(page, tree), DimensionMismatch);
}
