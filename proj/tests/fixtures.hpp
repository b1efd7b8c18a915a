// Hand-built images the tests share: an ASCII-art mask builder, a word image
// with a known baseline band and three pulse candidates of known verdicts,
// and the two documented-failure pages.
#pragma once

#include <string>
#include <vector>

#include "arseg/raster.hpp"

namespace fixtures {

/// '#' is ink, anything else background. Rows must be equal length.
inline arseg::InkImage from_ascii(const std::vector<std::string>& rows) {
    const int h = static_cast<int>(rows.size());
    const int w = static_cast<int>(rows[0].size());
    arseg::InkImage img(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (rows[y][x] == '#')
                img.set(x, y, true);
    return img;
}

inline void fill(arseg::InkImage& img, int x0, int y0, int x1, int y1) {
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x)
            img.set(x, y, true);
}

/// Word image whose horizontal-profile peak is row 29 and whose baseline
/// band at half maximum is rows [28,32]. Columns hold exactly three pulse
/// candidates for the connection filter (epsilon 0, min_len 2):
///   [3,5]   rows [36,41], below the band     -> rejected, outside_baseline
///   [7,10]  rows [28,32], the band itself    -> accepted
///   [12,14] rows [10,14] and [36,40], split  -> rejected, edges_not_two
/// Body bars have alternating column heights so they never form a constant
/// run, and the short bars at columns 16..21 pin the profile peak to row 29
/// without adding pulses.
inline arseg::InkImage validation_word() {
    arseg::InkImage img(22, 48);
    // body bars, heights alternating 33/31/33
    fill(img, 0, 8, 0, 40);
    fill(img, 1, 9, 1, 39);
    fill(img, 2, 8, 2, 40);
    fill(img, 6, 8, 6, 40);
    fill(img, 11, 8, 11, 40);
    fill(img, 15, 8, 15, 40);
    // candidate A: below the band
    fill(img, 3, 36, 5, 41);
    // candidate B: exactly the band rows
    fill(img, 7, 28, 10, 32);
    // candidate C: two separate row runs
    fill(img, 12, 10, 14, 14);
    fill(img, 12, 36, 14, 40);
    // peak pins: single pixels and 3-row bars alternating, all inside the band
    for (int x = 16; x <= 21; ++x) {
        if (x % 2 == 0)
            fill(img, x, 29, x, 29);
        else
            fill(img, x, 28, x, 30);
    }
    return img;
}

/// Page with a rectangular frame around two separated text bars. The frame
/// sides keep every row inked, so line extraction sees one tall band.
inline arseg::InkImage framed_box_page() {
    arseg::InkImage img(80, 60);
    fill(img, 5, 5, 74, 6);    // frame top
    fill(img, 5, 53, 74, 54);  // frame bottom
    fill(img, 5, 7, 6, 52);    // frame left
    fill(img, 73, 7, 74, 52);  // frame right
    fill(img, 15, 15, 64, 22); // first text bar
    fill(img, 15, 37, 64, 44); // second text bar
    return img;
}

/// Line with two words and a narrow punctuation mark one column from the
/// first word's end. Word one: two blocks joined by a baseline bridge.
struct PunctuationLine {
    arseg::InkImage image;
    arseg::Band word1;       // block span, not counting the mark
    arseg::Band mark;        // the punctuation part
    arseg::Band word2;
};

inline PunctuationLine punctuation_line() {
    PunctuationLine f;
    f.image = arseg::InkImage(70, 20);
    // word 1: blocks [0,9] and [16,25], bridge [10,15] on rows [12,13]
    fill(f.image, 0, 2, 9, 17);
    fill(f.image, 16, 2, 25, 17);
    fill(f.image, 10, 12, 15, 13);
    f.word1 = {0, 25};
    // punctuation: thin bar one column away
    fill(f.image, 27, 4, 28, 15);
    f.mark = {27, 28};
    // word 2: a block far enough to stay separate
    fill(f.image, 45, 2, 58, 17);
    f.word2 = {45, 58};
    return f;
}

} // namespace fixtures
