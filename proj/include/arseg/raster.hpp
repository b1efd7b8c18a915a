#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arseg/geometry.hpp"

namespace arseg {

/// 8-bit grayscale raster, row-major. 0 is black ink, 255 is white background.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 255)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

    std::uint8_t at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    void set(int x, int y, std::uint8_t v) {
        pixels[static_cast<std::size_t>(y) * width + x] = v;
    }
};

/// Binarized view of a page. The gray source is retained because character
/// cuts are applied to the original image, and the crop origin is kept so
/// sub-image coordinates can be mapped back to the page.
struct InkImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> ink; // 1 = ink, 0 = background
    GrayImage source;
    int origin_x = 0;
    int origin_y = 0;

    InkImage() = default;
    InkImage(int w, int h)
        : width(w), height(h), ink(static_cast<std::size_t>(w) * h, 0),
          source(w, h, 255) {}

    bool at(int x, int y) const {
        return ink[static_cast<std::size_t>(y) * width + x] != 0;
    }
    void set(int x, int y, bool v) {
        ink[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0;
        if (v)
            source.set(x, y, 0);
    }

    std::int64_t ink_count() const {
        std::int64_t n = 0;
        for (auto b : ink)
            n += b;
        return n;
    }
};

/// One connected group of ink pixels.
struct ComponentStats {
    int label = 0; // contiguous from 1 in (y0, x0) order
    Rect box;
    std::int64_t area = 0;
};

enum class Connectivity { four, eight };

/// Per-pixel component labels plus their stats. Label 0 is background.
struct LabelMap {
    std::vector<std::int32_t> labels;
    std::vector<ComponentStats> stats;
};

// --- file I/O (PGM P5/P2 read, P5 write, PNG read/write) ------------------

GrayImage load_image(const std::string& path);
void write_pgm(const std::string& path, const GrayImage& img);
void write_png(const std::string& path, const GrayImage& img);

/// Interleaved 8-bit RGB raster, used only for overlay rendering.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb;

    RgbImage() = default;
    RgbImage(int w, int h)
        : width(w), height(h), rgb(static_cast<std::size_t>(w) * h * 3, 255) {}

    void set(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
        auto i = (static_cast<std::size_t>(y) * width + x) * 3;
        rgb[i] = r;
        rgb[i + 1] = g;
        rgb[i + 2] = b;
    }
};

void write_png_rgb(const std::string& path, const RgbImage& img);

// --- pixel operations ------------------------------------------------------

/// Ink is every pixel strictly below the threshold.
InkImage binarize(const GrayImage& img, int threshold);

/// Threshold maximizing between-class variance of the 256-bin histogram,
/// ties broken toward the smaller threshold.
int otsu_threshold(const GrayImage& img);

/// Sub-image covering x_band columns and y_band rows. Both the mask and the
/// gray source are copied; the origin offset accumulates across crops.
InkImage crop(const InkImage& img, Band x_band, Band y_band);

LabelMap label_components(const InkImage& img,
                          Connectivity conn = Connectivity::eight);

/// Components sorted by (y0, x0), labels contiguous from 1.
std::vector<ComponentStats> connected_components(
    const InkImage& img, Connectivity conn = Connectivity::eight);

/// Clears ink inside the box; the retained gray source is whited out there.
InkImage erase_box(const InkImage& img, const Rect& box);

} // namespace arseg
