#include "arseg/line_seg.hpp"

#include "arseg/errors.hpp"
#include "arseg/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace arseg {
namespace {

std::int64_t band_ink(const Profile& p, const Band& b) {
    std::int64_t s = 0;
    for (int i = b.start; i <= b.end; ++i)
        s += p.values[i];
    return s;
}

// Reference height for the thin-band test. Weighted by ink so that a page
// where diacritic-only bands outnumber body bands still yields a body-sized
// reference; a plain median would collapse to the dot height there.
int weighted_median_height(const std::vector<Band>& bands, const Profile& p) {
    struct Entry {
        int height;
        std::int64_t weight;
    };
    std::vector<Entry> entries;
    std::int64_t total = 0;
    for (const auto& b : bands) {
        const std::int64_t w = band_ink(p, b);
        entries.push_back({b.width(), w});
        total += w;
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.height < b.height; });
    std::int64_t acc = 0;
    for (const auto& e : entries) {
        acc += e.weight;
        if (2 * acc >= total)
            return e.height;
    }
    return entries.empty() ? 0 : entries.back().height;
}

} // namespace

BaselineBand compute_baseline(const InkImage& line, double beta) {
    if (line.ink_count() == 0)
        throw EmptyLine("compute_baseline: line has no ink");
    const Profile hp = horizontal_profile(line);
    std::int64_t max_v = 0;
    int peak = 0;
    for (int j = 0; j < static_cast<int>(hp.values.size()); ++j) {
        if (hp.values[j] > max_v) {
            max_v = hp.values[j];
            peak = j;
        }
    }
    const double cut = beta * static_cast<double>(max_v);
    auto above = [&](int j) { return static_cast<double>(hp.values[j]) >= cut; };
    int top = peak;
    while (top > 0 && above(top - 1))
        --top;
    int bottom = peak;
    while (bottom + 1 < static_cast<int>(hp.values.size()) && above(bottom + 1))
        ++bottom;
    return {peak, top, bottom};
}

std::vector<LineSegment> segment_lines(const InkImage& page, const LineConfig& cfg) {
    const Profile hp = horizontal_profile(page);
    std::int64_t max_v = 0;
    for (auto v : hp.values)
        max_v = std::max(max_v, v);
    if (max_v == 0)
        return {};

    std::int64_t threshold = cfg.threshold;
    if (threshold < 0)
        threshold = std::max<std::int64_t>(
            255, std::llround(0.02 * static_cast<double>(max_v)));

    std::vector<Band> bands =
        threshold_bands(hp, threshold, cfg.min_width, cfg.merge_gap);
    if (bands.empty())
        return {};

    const int ref_height = weighted_median_height(bands, hp);
    double attach_gap = cfg.attach_gap;
    if (attach_gap < 0)
        attach_gap = 0.5 * ref_height;
    const double thin_height = cfg.min_body_ratio * ref_height;

    // Attach each thin band to its nearest neighbor when the gap is small
    // enough; restart after every merge so gaps are measured on the current
    // band list.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < bands.size(); ++k) {
            if (bands.size() == 1)
                break;
            if (bands[k].width() >= thin_height)
                continue;
            const int gap_prev =
                k > 0 ? bands[k].start - bands[k - 1].end - 1
                      : std::numeric_limits<int>::max();
            const int gap_next =
                k + 1 < bands.size() ? bands[k + 1].start - bands[k].end - 1
                                     : std::numeric_limits<int>::max();
            const int gap = std::min(gap_prev, gap_next);
            if (gap >= attach_gap)
                continue;
            if (gap_prev <= gap_next) {
                bands[k - 1].end = bands[k].end;
                bands.erase(bands.begin() + k);
            } else {
                bands[k + 1].start = bands[k].start;
                bands.erase(bands.begin() + k);
            }
            changed = true;
            break;
        }
    }

    std::vector<LineSegment> lines;
    for (const auto& b : bands) {
        LineSegment seg;
        seg.y_band = b;
        seg.image = crop(page, {0, page.width - 1}, b);
        seg.baseline = compute_baseline(seg.image, cfg.beta);
        lines.push_back(std::move(seg));
    }
    return lines;
}

} // namespace arseg
