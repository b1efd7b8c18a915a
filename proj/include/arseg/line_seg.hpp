#pragma once

#include <vector>

#include "arseg/geometry.hpp"
#include "arseg/raster.hpp"

namespace arseg {

/// Row interval around the horizontal-profile maximum of a line, plus the
/// peak row itself. Coordinates are local to the line image.
struct BaselineBand {
    int peak_row = 0; // serialized as "v_ind_max"
    int top = 0;
    int bottom = 0;

    int height() const { return bottom - top + 1; }
    bool operator==(const BaselineBand&) const = default;
};

struct LineSegment {
    Band y_band;            // page rows
    BaselineBand baseline;  // line-local rows
    InkImage image;         // cropped line, full page width
};

struct LineConfig {
    /// Stage-1 profile threshold. Negative means auto:
    /// max(255, round(0.02 * profile maximum)).
    int threshold = -1;
    int min_width = 1;
    int merge_gap = 0;
    /// Stage-2 merge rule: a band is a diacritic candidate when its height is
    /// below min_body_ratio times the reference height (ink-weighted median
    /// of band heights).
    double min_body_ratio = 0.3;
    /// Maximum row gap for attaching a diacritic band to its neighbor.
    /// Negative means auto: round(0.5 * reference height).
    int attach_gap = -1;
    /// Baseline band cutoff as a fraction of the profile maximum.
    double beta = 0.5;
};

/// Two-stage line extraction: threshold bands on the horizontal profile,
/// then attach diacritic-only bands to their line body. A blank page yields
/// an empty list.
std::vector<LineSegment> segment_lines(const InkImage& page,
                                       const LineConfig& cfg = {});

/// Peak row is the smallest row attaining the profile maximum; the band is
/// the maximal contiguous run around it with values >= beta * maximum.
BaselineBand compute_baseline(const InkImage& line, double beta = 0.5);

} // namespace arseg
