#include "arseg/profile.hpp"

#include <deque>

namespace arseg {

Profile horizontal_profile(const InkImage& img) {
    Profile p;
    p.axis = Axis::horizontal;
    p.values.assign(img.height, 0);
    for (int y = 0; y < img.height; ++y) {
        std::int64_t count = 0;
        const std::size_t row = static_cast<std::size_t>(y) * img.width;
        for (int x = 0; x < img.width; ++x)
            count += img.ink[row + x];
        p.values[y] = 255 * count;
    }
    return p;
}

Profile vertical_profile(const InkImage& img) {
    Profile p;
    p.axis = Axis::vertical;
    p.values.assign(img.width, 0);
    for (int y = 0; y < img.height; ++y) {
        const std::size_t row = static_cast<std::size_t>(y) * img.width;
        for (int x = 0; x < img.width; ++x)
            p.values[x] += 255 * static_cast<std::int64_t>(img.ink[row + x]);
    }
    return p;
}

std::vector<Band> threshold_bands(const Profile& p, std::int64_t threshold,
                                  int min_width, int merge_gap) {
    std::vector<Band> runs;
    const int n = static_cast<int>(p.values.size());
    int i = 0;
    while (i < n) {
        if (p.values[i] < threshold) {
            ++i;
            continue;
        }
        const int start = i;
        while (i < n && p.values[i] >= threshold)
            ++i;
        runs.push_back({start, i - 1});
    }

    std::vector<Band> merged;
    for (const auto& r : runs) {
        if (!merged.empty() && r.start - merged.back().end - 1 < merge_gap)
            merged.back().end = r.end;
        else
            merged.push_back(r);
    }

    std::vector<Band> out;
    for (const auto& b : merged)
        if (b.width() >= min_width)
            out.push_back(b);
    return out;
}

std::vector<Pulse> low_variation_runs(const Profile& p, std::int64_t epsilon,
                                      int min_len) {
    const int n = static_cast<int>(p.values.size());
    const auto& v = p.values;

    // For each start l, grow the window to the furthest r keeping the run
    // valid (all positive, max-min <= epsilon). R(l) is non-decreasing, so a
    // single right pointer with monotonic max/min deques covers all starts.
    // [l, R(l)] is reported when it cannot be extended left either, i.e. at
    // l = 0, after a zero, or when R(l-1) stopped short of R(l).
    std::vector<Pulse> out;
    std::deque<int> maxq, minq;
    std::int64_t sum = 0;
    int r = 0; // one past the window end
    int prev_reach = -1;

    auto push_right = [&](int idx) {
        while (!maxq.empty() && v[maxq.back()] <= v[idx])
            maxq.pop_back();
        maxq.push_back(idx);
        while (!minq.empty() && v[minq.back()] >= v[idx])
            minq.pop_back();
        minq.push_back(idx);
        sum += v[idx];
    };
    auto window_valid_with = [&](int idx) {
        if (v[idx] <= 0)
            return false;
        const std::int64_t mx = maxq.empty() ? v[idx]
                                             : std::max(v[maxq.front()], v[idx]);
        const std::int64_t mn = minq.empty() ? v[idx]
                                             : std::min(v[minq.front()], v[idx]);
        return mx - mn <= epsilon;
    };

    for (int l = 0; l < n; ++l) {
        if (v[l] <= 0) {
            prev_reach = -1;
            continue;
        }
        if (r < l) {
            // window collapsed past a zero; restart at l
            maxq.clear();
            minq.clear();
            sum = 0;
            r = l;
        }
        while (r < n && window_valid_with(r)) {
            push_right(r);
            ++r;
        }
        const int reach = r - 1; // >= l because v[l] > 0
        const bool left_extendable = prev_reach >= reach;
        if (!left_extendable && reach - l + 1 >= min_len) {
            Pulse pu;
            pu.band = {l, reach};
            pu.mean_amplitude =
                static_cast<double>(sum) / static_cast<double>(reach - l + 1);
            out.push_back(pu);
        }
        prev_reach = reach;
        // slide the left edge out of the window
        if (!maxq.empty() && maxq.front() == l)
            maxq.pop_front();
        if (!minq.empty() && minq.front() == l)
            minq.pop_front();
        sum -= v[l];
    }
    return out;
}

std::vector<int> step_edges(const Profile& p) {
    std::vector<int> edges;
    bool in_run = false;
    const int n = static_cast<int>(p.values.size());
    for (int i = 0; i < n; ++i) {
        const bool nonzero = p.values[i] != 0;
        if (nonzero != in_run) {
            edges.push_back(i);
            in_run = nonzero;
        }
    }
    if (in_run)
        edges.push_back(n);
    return edges;
}

} // namespace arseg
