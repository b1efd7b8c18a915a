#include "arseg/raster.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "arseg/errors.hpp"

namespace arseg {

InkImage binarize(const GrayImage& img, int threshold) {
    InkImage out;
    out.width = img.width;
    out.height = img.height;
    out.source = img;
    out.ink.resize(img.pixels.size());
    for (std::size_t i = 0; i < img.pixels.size(); ++i)
        out.ink[i] = img.pixels[i] < threshold ? 1 : 0;
    return out;
}

int otsu_threshold(const GrayImage& img) {
    std::array<std::int64_t, 256> hist{};
    for (auto p : img.pixels)
        ++hist[p];

    const std::int64_t total = static_cast<std::int64_t>(img.pixels.size());
    std::int64_t total_sum = 0;
    for (int v = 0; v < 256; ++v)
        total_sum += static_cast<std::int64_t>(v) * hist[v];

    // Threshold t splits into {p < t} and {p >= t}; t = 0 leaves the ink
    // class empty and scores zero, which is what a single-class image gets.
    int best_t = 0;
    double best_score = 0.0;
    std::int64_t c0 = 0, sum0 = 0;
    for (int t = 1; t < 256; ++t) {
        c0 += hist[t - 1];
        sum0 += static_cast<std::int64_t>(t - 1) * hist[t - 1];
        const std::int64_t c1 = total - c0;
        if (c0 == 0 || c1 == 0)
            continue;
        const double mu0 = static_cast<double>(sum0) / static_cast<double>(c0);
        const double mu1 = static_cast<double>(total_sum - sum0) /
                           static_cast<double>(c1);
        const double d = mu0 - mu1;
        const double score = static_cast<double>(c0) *
                             static_cast<double>(c1) * d * d;
        if (score > best_score) {
            best_score = score;
            best_t = t;
        }
    }
    return best_t;
}

namespace {

void check_band(const Band& b, int extent, const char* what) {
    if (b.start < 0 || b.end < b.start || b.end >= extent)
        throw BandOutOfBounds(std::string(what) + " band outside image");
}

} // namespace

InkImage crop(const InkImage& img, Band x_band, Band y_band) {
    check_band(x_band, img.width, "x");
    check_band(y_band, img.height, "y");

    InkImage out(x_band.width(), y_band.width());
    out.origin_x = img.origin_x + x_band.start;
    out.origin_y = img.origin_y + y_band.start;
    for (int y = 0; y < out.height; ++y) {
        for (int x = 0; x < out.width; ++x) {
            const int sx = x_band.start + x;
            const int sy = y_band.start + y;
            out.ink[static_cast<std::size_t>(y) * out.width + x] =
                img.ink[static_cast<std::size_t>(sy) * img.width + sx];
            out.source.set(x, y, img.source.at(sx, sy));
        }
    }
    return out;
}

LabelMap label_components(const InkImage& img, Connectivity conn) {
    LabelMap map;
    map.labels.assign(img.ink.size(), 0);
    if (img.ink.empty())
        return map;

    static constexpr int dx8[] = {-1, 0, 1, -1, 1, -1, 0, 1};
    static constexpr int dy8[] = {-1, -1, -1, 0, 0, 1, 1, 1};
    static constexpr int dx4[] = {0, -1, 1, 0};
    static constexpr int dy4[] = {-1, 0, 0, 1};
    const int* dx = conn == Connectivity::eight ? dx8 : dx4;
    const int* dy = conn == Connectivity::eight ? dy8 : dy4;
    const int ndir = conn == Connectivity::eight ? 8 : 4;

    std::vector<std::pair<int, int>> stack;
    std::int32_t next = 0;
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * img.width + x;
            if (!img.ink[i] || map.labels[i] != 0)
                continue;
            ++next;
            ComponentStats st;
            st.label = next;
            st.box = {x, y, x, y};
            st.area = 0;
            map.labels[i] = next;
            stack.clear();
            stack.emplace_back(x, y);
            while (!stack.empty()) {
                auto [cx, cy] = stack.back();
                stack.pop_back();
                ++st.area;
                st.box.x0 = std::min(st.box.x0, cx);
                st.box.x1 = std::max(st.box.x1, cx);
                st.box.y0 = std::min(st.box.y0, cy);
                st.box.y1 = std::max(st.box.y1, cy);
                for (int d = 0; d < ndir; ++d) {
                    const int nx = cx + dx[d];
                    const int ny = cy + dy[d];
                    if (nx < 0 || ny < 0 || nx >= img.width || ny >= img.height)
                        continue;
                    const std::size_t ni =
                        static_cast<std::size_t>(ny) * img.width + nx;
                    if (img.ink[ni] && map.labels[ni] == 0) {
                        map.labels[ni] = next;
                        stack.emplace_back(nx, ny);
                    }
                }
            }
            map.stats.push_back(st);
        }
    }

    std::sort(map.stats.begin(), map.stats.end(),
              [](const ComponentStats& a, const ComponentStats& b) {
                  if (a.box.y0 != b.box.y0)
                      return a.box.y0 < b.box.y0;
                  if (a.box.x0 != b.box.x0)
                      return a.box.x0 < b.box.x0;
                  return a.label < b.label;
              });
    std::vector<std::int32_t> remap(map.stats.size() + 1, 0);
    for (std::size_t k = 0; k < map.stats.size(); ++k) {
        remap[map.stats[k].label] = static_cast<std::int32_t>(k + 1);
        map.stats[k].label = static_cast<int>(k + 1);
    }
    for (auto& l : map.labels)
        if (l != 0)
            l = remap[l];
    return map;
}

std::vector<ComponentStats> connected_components(const InkImage& img,
                                                 Connectivity conn) {
    return label_components(img, conn).stats;
}

InkImage erase_box(const InkImage& img, const Rect& box) {
    check_band({box.x0, box.x1}, img.width, "x");
    check_band({box.y0, box.y1}, img.height, "y");

    InkImage out = img;
    for (int y = box.y0; y <= box.y1; ++y) {
        for (int x = box.x0; x <= box.x1; ++x) {
            out.ink[static_cast<std::size_t>(y) * out.width + x] = 0;
            out.source.set(x, y, 255);
        }
    }
    return out;
}

} // namespace arseg
