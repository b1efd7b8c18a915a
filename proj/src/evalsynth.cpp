#include "arseg/evalsynth.hpp"

#include "arseg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>

namespace arseg {
namespace {

void validate_spec(const SynthSpec& s) {
    auto need = [](bool ok, const char* what) {
        if (!ok)
            throw SpecDoesNotFit(std::string("synthetic layout: ") + what);
    };
    need(s.lines >= 1 && s.words_per_line >= 1 && s.chars_per_word >= 1,
         "counts must be at least 1");
    need(s.stroke_px >= 1 && s.char_size_px >= 1 && s.char_width_px >= 1 &&
             s.bridge_len_px >= 1 && s.gap_px >= 1 && s.line_gap_px >= 1 &&
             s.margin_px >= 0,
         "dimensions must be positive");
    need(s.char_size_px >= s.stroke_px, "block shorter than the bridge stroke");
    need(s.dot_prob >= 0.0 && s.dot_prob <= 1.0, "dot probability outside [0,1]");
    if (s.dot_prob > 0.0) {
        need(s.dot_px >= 1 && s.dot_gap_px >= 1, "dots need size and clearance");
        need(s.dot_px <= s.char_width_px, "dot wider than its character block");
    }
    need(s.baseline_frac >= 0.0 && s.baseline_frac <= 1.0,
         "baseline fraction outside [0,1]");
}

} // namespace

std::pair<GrayImage, GroundTruth> generate_synthetic_page(const SynthSpec& spec,
                                                          std::uint32_t seed) {
    validate_spec(spec);

    const int word_w = spec.chars_per_word * spec.char_width_px +
                       (spec.chars_per_word - 1) * spec.bridge_len_px;
    const int line_w = spec.words_per_line * word_w +
                       (spec.words_per_line - 1) * spec.gap_px;
    const int dot_h = spec.dot_prob > 0.0 ? spec.dot_px + spec.dot_gap_px : 0;
    const int slot_h = spec.char_size_px + 2 * dot_h;
    const int width = line_w + 2 * spec.margin_px;
    const int height = spec.lines * slot_h +
                       (spec.lines - 1) * spec.line_gap_px + 2 * spec.margin_px;

    GrayImage img(width, height, 255);
    GroundTruth truth;
    truth.width = width;
    truth.height = height;

    std::mt19937_64 rng(seed);
    auto flip = [&](double p) {
        // fixed-point comparison keeps the stream portable
        return (rng() % 1000000) < static_cast<std::uint64_t>(
                                       std::llround(p * 1000000.0));
    };
    auto fill = [&](int x0, int y0, int x1, int y1) {
        for (int y = y0; y <= y1; ++y)
            for (int x = x0; x <= x1; ++x)
                img.set(x, y, 0);
    };

    for (int li = 0; li < spec.lines; ++li) {
        const int slot_top = spec.margin_px + li * (slot_h + spec.line_gap_px);
        const int block_top = slot_top + dot_h;
        const int block_bottom = block_top + spec.char_size_px - 1;
        const int base_top =
            block_top + static_cast<int>(std::lround(
                            spec.baseline_frac *
                            (spec.char_size_px - spec.stroke_px)));
        const int base_bottom = base_top + spec.stroke_px - 1;

        TruthLine tline;
        int ink_top = block_top;
        int ink_bottom = block_bottom;

        for (int wi = 0; wi < spec.words_per_line; ++wi) {
            const int word_x = spec.margin_px + wi * (word_w + spec.gap_px);
            TruthWord tword;
            tword.x_band = {word_x, word_x + word_w - 1};

            std::vector<int> cuts; // word-local cut columns
            for (int ci = 0; ci < spec.chars_per_word; ++ci) {
                const int bx =
                    word_x + ci * (spec.char_width_px + spec.bridge_len_px);
                fill(bx, block_top, bx + spec.char_width_px - 1, block_bottom);
                if (ci + 1 < spec.chars_per_word) {
                    const int bridge_x = bx + spec.char_width_px;
                    fill(bridge_x, base_top,
                         bridge_x + spec.bridge_len_px - 1, base_bottom);
                    const int s = bridge_x - word_x;
                    const int e = s + spec.bridge_len_px - 1;
                    cuts.push_back((s + e) / 2);
                }
                if (spec.dot_prob > 0.0) {
                    const int dot_x =
                        bx + (spec.char_width_px - spec.dot_px) / 2;
                    if (flip(spec.dot_prob)) { // above
                        const int dy1 = block_top - spec.dot_gap_px - 1;
                        fill(dot_x, dy1 - spec.dot_px + 1,
                             dot_x + spec.dot_px - 1, dy1);
                        ink_top = std::min(ink_top, dy1 - spec.dot_px + 1);
                    }
                    if (flip(spec.dot_prob)) { // below
                        const int dy0 = block_bottom + spec.dot_gap_px + 1;
                        fill(dot_x, dy0, dot_x + spec.dot_px - 1,
                             dy0 + spec.dot_px - 1);
                        ink_bottom = std::max(ink_bottom, dy0 + spec.dot_px - 1);
                    }
                }
            }

            int prev = -1;
            for (int c : cuts) {
                tword.chars.push_back({word_x + prev + 1, word_x + c});
                prev = c;
            }
            tword.chars.push_back({word_x + prev + 1, word_x + word_w - 1});
            tline.words.push_back(std::move(tword));
        }

        tline.y_band = {ink_top, ink_bottom};
        truth.lines.push_back(std::move(tline));
    }
    return {std::move(img), std::move(truth)};
}

PageConfig exact_page_config(const SynthSpec& spec) {
    validate_spec(spec);
    auto need = [](bool ok, const char* what) {
        if (!ok)
            throw SpecDoesNotFit(std::string("exact config: ") + what);
    };
    if (spec.chars_per_word >= 2)
        need(spec.char_size_px > spec.stroke_px,
             "bridge indistinguishable from blocks");
    if (spec.dot_prob > 0.0) {
        need(2 * spec.dot_px < spec.char_size_px,
             "dot bands as tall as line bodies");
        need(spec.dot_gap_px < spec.line_gap_px,
             "dots closer to the neighboring line than to their own");
    }

    PageConfig cfg;
    cfg.binarize_threshold = 128;
    cfg.line.threshold = 255;
    cfg.line.min_width = 1;
    cfg.line.merge_gap = 0;
    cfg.line.min_body_ratio = 0.5;
    cfg.line.attach_gap = spec.dot_gap_px + 1;
    // The baseline band must cover exactly the bridge rows: pick the cutoff
    // halfway between the block-only profile value and the peak.
    const double blk = static_cast<double>(spec.words_per_line) *
                       spec.chars_per_word * spec.char_width_px;
    const double brg = static_cast<double>(spec.words_per_line) *
                       (spec.chars_per_word - 1) * spec.bridge_len_px;
    cfg.line.beta = brg > 0.0 ? (blk + 0.5 * brg) / (blk + brg) : 1.0;
    cfg.word_gap = spec.gap_px;
    cfg.chars.epsilon = 0;
    cfg.chars.min_len = spec.chars_per_word == 1
                            ? spec.char_width_px + 1
                            : std::min(2, spec.bridge_len_px);
    cfg.chars.max_diacritic_area =
        static_cast<std::int64_t>(spec.dot_px) * spec.dot_px;
    return cfg;
}

namespace {

struct IndexedBand {
    Band band;
    int idx = 0;
};

std::vector<IndexedBand> by_start(std::vector<IndexedBand> v) {
    std::sort(v.begin(), v.end(), [](const IndexedBand& a, const IndexedBand& b) {
        return a.band.start < b.band.start;
    });
    return v;
}

bool band_match(const Band& a, const Band& b, int tol) {
    return std::abs(a.start - b.start) <= tol && std::abs(a.end - b.end) <= tol;
}

// Greedy left-to-right pairing: truth bands in order, predictions consumed in
// order, a prediction is dropped once its extent is behind the current truth
// band. Returns (truth idx, original prediction idx) pairs.
std::vector<std::pair<int, int>> match_bands(
    const std::vector<Band>& truth, const std::vector<IndexedBand>& pred,
    int tol) {
    std::vector<std::pair<int, int>> pairs;
    std::size_t j = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        while (j < pred.size() && pred[j].band.end < truth[i].start - tol)
            ++j;
        if (j < pred.size() && band_match(truth[i], pred[j].band, tol)) {
            pairs.emplace_back(static_cast<int>(i), pred[j].idx);
            ++j;
        }
    }
    return pairs;
}

void tally(MatchCounts& mc, std::int64_t truth_n, std::int64_t pred_n,
           std::int64_t matched) {
    mc.matched += matched;
    mc.missed += truth_n - matched;
    mc.spurious += pred_n - matched;
}

double ratio(const MatchCounts& mc) {
    const std::int64_t total = mc.matched + mc.missed;
    return total == 0 ? 1.0
                      : static_cast<double>(mc.matched) /
                            static_cast<double>(total);
}

} // namespace

EvalReport evaluate(const SegmentTree& tree, const GroundTruth& truth, int tol) {
    if (tree.width != truth.width || tree.height != truth.height)
        throw DimensionMismatch(
            "evaluate: tree page is " + std::to_string(tree.width) + "x" +
            std::to_string(tree.height) + ", truth page is " +
            std::to_string(truth.width) + "x" + std::to_string(truth.height));

    EvalReport rep;
    rep.tol = tol;

    std::vector<Band> truth_lines;
    std::vector<IndexedBand> pred_lines;
    for (const auto& l : truth.lines)
        truth_lines.push_back(l.y_band);
    for (std::size_t i = 0; i < tree.lines.size(); ++i)
        pred_lines.push_back({tree.lines[i].y_band, static_cast<int>(i)});
    pred_lines = by_start(std::move(pred_lines));
    const auto line_pairs = match_bands(truth_lines, pred_lines, tol);
    tally(rep.lines, static_cast<std::int64_t>(truth_lines.size()),
          static_cast<std::int64_t>(pred_lines.size()),
          static_cast<std::int64_t>(line_pairs.size()));

    // Totals at the lower levels count every band; only bands under matched
    // parents can contribute to matched. Truth words double as truth parts
    // (a ground-truth word is one connected part by construction).
    std::int64_t truth_words = 0, truth_chars = 0;
    for (const auto& l : truth.lines) {
        truth_words += static_cast<std::int64_t>(l.words.size());
        for (const auto& w : l.words)
            truth_chars += static_cast<std::int64_t>(w.chars.size());
    }
    std::int64_t pred_words = 0, pred_parts = 0, pred_chars = 0;
    for (const auto& l : tree.lines)
        for (const auto& w : l.words) {
            ++pred_words;
            pred_parts += static_cast<std::int64_t>(w.parts.size());
            pred_chars += static_cast<std::int64_t>(w.chars.size());
        }

    std::int64_t m_words = 0, m_parts = 0, m_chars = 0;
    for (const auto& [li_t, li_p] : line_pairs) {
        const auto& tl = truth.lines[li_t];
        const auto& pl = tree.lines[li_p];

        std::vector<Band> tw;
        std::vector<IndexedBand> pw, pp;
        for (const auto& w : tl.words)
            tw.push_back(w.x_band);
        for (std::size_t i = 0; i < pl.words.size(); ++i) {
            pw.push_back({pl.words[i].x_band, static_cast<int>(i)});
            for (const auto& b : pl.words[i].parts)
                pp.push_back({b, 0});
        }
        pw = by_start(std::move(pw));
        pp = by_start(std::move(pp));
        const auto word_pairs = match_bands(tw, pw, tol);
        m_words += static_cast<std::int64_t>(word_pairs.size());
        m_parts += static_cast<std::int64_t>(match_bands(tw, pp, tol).size());

        for (const auto& [wi_t, wi_p] : word_pairs) {
            std::vector<Band> tc;
            std::vector<IndexedBand> pc;
            for (const auto& b : tl.words[wi_t].chars)
                tc.push_back(b);
            for (const auto& c : pl.words[wi_p].chars)
                pc.push_back({c.x_band, 0});
            pc = by_start(std::move(pc));
            m_chars += static_cast<std::int64_t>(match_bands(tc, pc, tol).size());
        }
    }

    tally(rep.words, truth_words, pred_words, m_words);
    tally(rep.parts, truth_words, pred_parts, m_parts);
    tally(rep.chars, truth_chars, pred_chars, m_chars);

    rep.line_ratio = ratio(rep.lines);
    rep.word_ratio = ratio(rep.words);
    rep.part_ratio = ratio(rep.parts);
    rep.char_ratio = ratio(rep.chars);
    return rep;
}

} // namespace arseg
