#pragma once

namespace arseg {

/// Inclusive index interval on one axis (rows or columns).
struct Band {
    int start = 0;
    int end = 0;

    int width() const { return end - start + 1; }
    bool contains(int i) const { return i >= start && i <= end; }

    bool operator==(const Band&) const = default;
};

/// Axis-aligned rectangle with inclusive corners.
struct Rect {
    int x0 = 0;
    int y0 = 0;
    int x1 = 0;
    int y1 = 0;

    int width() const { return x1 - x0 + 1; }
    int height() const { return y1 - y0 + 1; }

    bool operator==(const Rect&) const = default;
};

} // namespace arseg
