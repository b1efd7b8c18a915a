#include "arseg/char_seg.hpp"

#include "arseg/errors.hpp"

#include <cmath>

namespace arseg {
namespace {

std::int64_t diacritic_area_bound(const CharConfig& cfg,
                                  const BaselineBand& baseline) {
    if (cfg.max_diacritic_area >= 0)
        return cfg.max_diacritic_area;
    const double h = static_cast<double>(baseline.height());
    return std::llround(1.5 * h * h);
}

} // namespace

InkImage strip_diacritics(const InkImage& word, const BaselineBand& baseline,
                          const CharConfig& cfg) {
    if (word.ink_count() == 0)
        throw EmptyWord("strip_diacritics: word has no ink");
    const std::int64_t bound = diacritic_area_bound(cfg, baseline);
    const LabelMap lm = label_components(word, Connectivity::eight);
    std::vector<char> drop(lm.stats.size() + 1, 0);
    bool any = false;
    for (const auto& c : lm.stats) {
        const bool on_baseline =
            c.box.y1 >= baseline.top && c.box.y0 <= baseline.bottom;
        if (!on_baseline && c.area <= bound) {
            drop[c.label] = 1;
            any = true;
        }
    }
    if (!any)
        return word;
    // Erase pixel by pixel so an overlapping bounding box of a kept component
    // is left alone.
    InkImage out = word;
    const std::size_t n = out.ink.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (drop[lm.labels[i]]) {
            out.ink[i] = 0;
            out.source.pixels[i] = 255;
        }
    }
    return out;
}

std::vector<Pulse> connection_pulses(const InkImage& no_points_word,
                                     const CharConfig& cfg) {
    return low_variation_runs(vertical_profile(no_points_word), cfg.epsilon,
                              cfg.min_len);
}

PulseVerdict validate_pulse(const InkImage& no_points_word, const Pulse& pulse,
                            const BaselineBand& baseline) {
    const InkImage sub =
        crop(no_points_word, pulse.band, {0, no_points_word.height - 1});
    const std::vector<int> edges = step_edges(horizontal_profile(sub));
    PulseVerdict v;
    v.pulse = pulse;
    if (edges.size() != 2) {
        v.reason = PulseReason::edges_not_two;
        return v;
    }
    const int run_top = edges[0];
    const int run_bottom = edges[1] - 1;
    const bool inside = run_top >= baseline.top && run_bottom <= baseline.bottom;
    const bool has_peak =
        run_top <= baseline.peak_row && baseline.peak_row <= run_bottom;
    if (inside && has_peak) {
        v.accepted = true;
        v.reason = PulseReason::accepted;
    } else {
        v.reason = PulseReason::outside_baseline;
    }
    return v;
}

std::vector<CharBox> segment_characters(const InkImage& word,
                                        const BaselineBand& baseline,
                                        const CharConfig& cfg) {
    if (word.ink_count() == 0)
        throw EmptyWord("segment_characters: word has no ink");
    const InkImage no_points = strip_diacritics(word, baseline, cfg);
    const std::vector<Pulse> pulses = connection_pulses(no_points, cfg);

    // Cut at each accepted pulse's midpoint; the cut column joins the slab on
    // its left. Provenance keeps the candidate index so a verdict can be
    // looked up later.
    struct Cut {
        int column;
        int pulse_index;
    };
    std::vector<Cut> cuts;
    for (std::size_t k = 0; k < pulses.size(); ++k) {
        const PulseVerdict v = validate_pulse(no_points, pulses[k], baseline);
        if (v.accepted)
            cuts.push_back({(pulses[k].band.start + pulses[k].band.end) / 2,
                            static_cast<int>(k)});
    }

    std::vector<CharBox> boxes;
    int slab_start = 0;
    std::string left = "word-edge";
    auto emit = [&](int slab_end, const std::string& right) {
        CharBox cb;
        cb.x_band = {slab_start, slab_end};
        int y0 = word.height, y1 = -1;
        for (int y = 0; y < word.height; ++y)
            for (int x = slab_start; x <= slab_end; ++x)
                if (word.at(x, y)) {
                    y0 = std::min(y0, y);
                    y1 = std::max(y1, y);
                }
        if (y1 < 0) { // slab caught no ink; keep the full word rows
            y0 = 0;
            y1 = word.height - 1;
        }
        cb.box = {word.origin_x + slab_start, word.origin_y + y0,
                  word.origin_x + slab_end, word.origin_y + y1};
        cb.cut_left = left;
        cb.cut_right = right;
        boxes.push_back(std::move(cb));
    };
    for (const auto& cut : cuts) {
        const std::string name = "pulse:" + std::to_string(cut.pulse_index);
        emit(cut.column, name);
        slab_start = cut.column + 1;
        left = name;
    }
    emit(word.width - 1, "word-edge");
    return boxes;
}

} // namespace arseg
