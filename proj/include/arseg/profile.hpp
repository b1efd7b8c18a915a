#pragma once

#include <cstdint>
#include <vector>

#include "arseg/geometry.hpp"
#include "arseg/raster.hpp"

namespace arseg {

enum class Axis { horizontal, vertical };

/// Projection profile: one summed ink value per row (horizontal) or per
/// column (vertical). On a binarized image every value is 255 times the ink
/// count of its row or column.
struct Profile {
    Axis axis = Axis::horizontal;
    std::vector<std::int64_t> values;
};

/// Maximal constant-amplitude run of a profile, the candidate output of the
/// low-variation filter.
struct Pulse {
    Band band;
    double mean_amplitude = 0.0;
};

Profile horizontal_profile(const InkImage& img);
Profile vertical_profile(const InkImage& img);

/// Maximal runs with values >= threshold. Runs separated by fewer than
/// merge_gap sub-threshold indices are merged; merged runs narrower than
/// min_width are dropped. Result is sorted and pairwise disjoint.
std::vector<Band> threshold_bands(const Profile& p, std::int64_t threshold,
                                  int min_width, int merge_gap);

/// All maximal runs of consecutive indices where every value is positive and
/// max - min over the run is at most epsilon. A run is maximal when extending
/// it one index in either direction breaks the predicate; with a loose
/// epsilon maximal runs may overlap. Runs shorter than min_len are dropped.
std::vector<Pulse> low_variation_runs(const Profile& p, std::int64_t epsilon,
                                      int min_len);

/// Zero/non-zero step edges: a rising edge at the first index of each
/// non-zero run, a falling edge at the first zero index after it (or at
/// values.size() when the run reaches the end). Ascending order.
std::vector<int> step_edges(const Profile& p);

} // namespace arseg
