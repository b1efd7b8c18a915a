#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "arseg/geometry.hpp"
#include "arseg/pipeline.hpp"
#include "arseg/raster.hpp"

namespace arseg {

/// Layout of a synthetic cursive page: each character is a solid block
/// crossing a common baseline row band, adjacent characters in a word are
/// joined by a constant-thickness bridge at the baseline, and dots may ride
/// above or below a character.
struct SynthSpec {
    int lines = 3;
    int words_per_line = 3;
    int chars_per_word = 3;
    int stroke_px = 2;      // bridge thickness (rows)
    int char_size_px = 12;  // block height
    int char_width_px = 10; // block width
    int bridge_len_px = 4;  // bridge length (columns)
    double dot_prob = 0.3;  // per-character dot probability
    int dot_px = 2;         // dot side length
    int dot_gap_px = 1;     // rows between dot and block
    int gap_px = 8;         // inter-word gap (columns)
    int line_gap_px = 10;   // rows between line extents
    int margin_px = 4;
    /// Vertical placement of the baseline band inside the block, as a
    /// fraction of the available rows (0 = top, 1 = bottom).
    double baseline_frac = 0.6;
};

struct TruthWord {
    Band x_band;
    std::vector<Band> chars;
};

struct TruthLine {
    Band y_band;
    std::vector<TruthWord> words;
};

/// Exact segmentation ground truth, all bands in page coordinates. Character
/// bands are the slabs delimited by bridge midpoints and word edges.
struct GroundTruth {
    int width = 0;
    int height = 0;
    std::vector<TruthLine> lines;
};

struct MatchCounts {
    std::int64_t matched = 0;
    std::int64_t missed = 0;   // truth bands without a prediction
    std::int64_t spurious = 0; // predictions without a truth band
};

/// Per-level correction ratios: matched / ground-truth count. word covers
/// clusters, part covers connected parts matched against the same truth
/// words.
struct EvalReport {
    double line_ratio = 0.0;
    double word_ratio = 0.0;
    double part_ratio = 0.0;
    double char_ratio = 0.0;
    MatchCounts lines;
    MatchCounts words;
    MatchCounts parts;
    MatchCounts chars;
    int tol = 0;
};

/// Deterministic per seed. Throws SpecDoesNotFit on a degenerate layout.
std::pair<GrayImage, GroundTruth> generate_synthetic_page(const SynthSpec& spec,
                                                          std::uint32_t seed);

/// Band matching with endpoint tolerance, parent-conditioned per level,
/// greedy left to right, each truth band matched at most once.
EvalReport evaluate(const SegmentTree& tree, const GroundTruth& truth, int tol);

/// Segmentation config tuned to a known synthetic layout: with it the
/// pipeline recovers the generator's ground truth exactly. Used by the
/// benchmark suite and handy for calibration experiments.
PageConfig exact_page_config(const SynthSpec& spec);

} // namespace arseg
