#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arseg/geometry.hpp"
#include "arseg/line_seg.hpp"
#include "arseg/profile.hpp"
#include "arseg/raster.hpp"

namespace arseg {

struct CharConfig {
    /// Amplitude tolerance of the low-variation filter, in profile units
    /// (255 per ink pixel).
    std::int64_t epsilon = 255;
    /// Minimum pulse length in columns.
    int min_len = 2;
    /// Components no larger than this and clear of the baseline band are
    /// stripped as diacritics. Negative means auto:
    /// round(1.5 * baseline band height squared).
    std::int64_t max_diacritic_area = -1;
};

enum class PulseReason { accepted, edges_not_two, outside_baseline };

struct PulseVerdict {
    Pulse pulse;
    bool accepted = false;
    PulseReason reason = PulseReason::outside_baseline;
};

/// One character slab of a word. x_band is in word-local columns; box is the
/// ink-tight rectangle in page coordinates. Cut provenance is "word-edge" or
/// "pulse:<k>" with k the candidate pulse index.
struct CharBox {
    Band x_band;
    Rect box;
    std::string cut_left;
    std::string cut_right;
};

/// Erases every component that misses the baseline band rows and is no
/// larger than the diacritic area bound, yielding the no-points image.
/// The baseline band is given in word-local rows.
InkImage strip_diacritics(const InkImage& word, const BaselineBand& baseline,
                          const CharConfig& cfg = {});

/// Low-variation pulses of the no-points vertical profile, left to right.
std::vector<Pulse> connection_pulses(const InkImage& no_points_word,
                                     const CharConfig& cfg = {});

/// Two-edge test on the pulse's sub-image horizontal profile: the pulse is a
/// character connector when the profile has exactly two step edges, the run
/// they delimit lies inside the baseline band, and the run contains the
/// profile peak row.
PulseVerdict validate_pulse(const InkImage& no_points_word, const Pulse& pulse,
                            const BaselineBand& baseline);

/// Full per-word pipeline: strip diacritics, detect pulses, validate each,
/// and cut the original with-diacritics image at the midpoints of accepted
/// pulses. With no accepted pulse the word is one character box.
std::vector<CharBox> segment_characters(const InkImage& word,
                                        const BaselineBand& baseline,
                                        const CharConfig& cfg = {});

} // namespace arseg
