#include <doctest.h>

#include <numeric>
#include <set>

#include "arseg/profile.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace arseg;

namespace {

Profile make(std::vector<std::int64_t> values, Axis axis = Axis::vertical) {
    return {axis, std::move(values)};
}

} // namespace

TEST_CASE("profiles sum 255 per ink pixel") {
    InkImage img(10, 7);
    for (int x = 0; x < 10; ++x)
        img.set(x, 3, true); // one full row
    for (int y = 0; y < 7; ++y)
        img.set(4, y, true); // one full column

    const Profile h = horizontal_profile(img);
    REQUIRE(h.values.size() == 7);
    CHECK(h.axis == Axis::horizontal);
    CHECK(h.values[3] == 2550);
    CHECK(h.values[0] == 255);

    const Profile v = vertical_profile(img);
    REQUIRE(v.values.size() == 10);
    CHECK(v.axis == Axis::vertical);
    CHECK(v.values[4] == 1785);
    CHECK(v.values[0] == 255);

    // both profiles account for every ink pixel exactly once
    const auto total = 255 * img.ink_count();
    CHECK(std::accumulate(h.values.begin(), h.values.end(), std::int64_t{0}) ==
          total);
    CHECK(std::accumulate(v.values.begin(), v.values.end(), std::int64_t{0}) ==
          total);
}

TEST_CASE("profiles of a blank image are all zero") {
    const InkImage img(5, 4);
    for (auto v : horizontal_profile(img).values)
        CHECK(v == 0);
    for (auto v : vertical_profile(img).values)
        CHECK(v == 0);
}

TEST_CASE("threshold_bands frozen cases") {
    const Profile p =
        make({0, 0, 510, 765, 510, 0, 0, 1020, 1020, 0});

    SUBCASE("plain runs") {
        const auto bands = threshold_bands(p, 255, 1, 0);
        REQUIRE(bands.size() == 2);
        CHECK(bands[0] == Band{2, 4});
        CHECK(bands[1] == Band{7, 8});
    }
    SUBCASE("merge_gap 3 bridges the two-index gap") {
        const auto bands = threshold_bands(p, 255, 1, 3);
        REQUIRE(bands.size() == 1);
        CHECK(bands[0] == Band{2, 8});
    }
    SUBCASE("merge_gap 2 does not (gap is exactly 2)") {
        CHECK(threshold_bands(p, 255, 1, 2).size() == 2);
    }
    SUBCASE("min_width drops after merging") {
        const auto bands = threshold_bands(p, 600, 1, 0);
        REQUIRE(bands.size() == 2); // [3,3] and [7,8]
        CHECK(threshold_bands(p, 600, 2, 0).size() == 1);
        CHECK(threshold_bands(p, 600, 2, 0)[0] == Band{7, 8});
        // merging first can rescue a narrow run
        const auto merged = threshold_bands(p, 600, 2, 5);
        REQUIRE(merged.size() == 1);
        CHECK(merged[0] == Band{3, 8});
    }
    SUBCASE("empty under an unreachable threshold") {
        CHECK(threshold_bands(p, 5000, 1, 0).empty());
    }
}

TEST_CASE("threshold_bands matches the scan oracle") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        const auto v = oracle::random_profile(rng, 64, 6);
        const Profile p = make(v);
        const std::int64_t thr = 255 * (1 + static_cast<std::int64_t>(rng() % 6));
        const int min_width = 1 + static_cast<int>(rng() % 3);
        const int merge_gap = static_cast<int>(rng() % 4);
        const auto got = threshold_bands(p, thr, min_width, merge_gap);
        const auto want = oracle::threshold_bands(v, thr, min_width, merge_gap);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i)
            CHECK(got[i] == want[i]);
        // sorted and disjoint
        for (std::size_t i = 1; i < got.size(); ++i)
            CHECK(got[i].start > got[i - 1].end);
    }
}

TEST_CASE("low_variation_runs frozen cases") {
    SUBCASE("constant run") {
        const auto pulses =
            low_variation_runs(make({1020, 1020, 1020, 1020}), 0, 2);
        REQUIRE(pulses.size() == 1);
        CHECK(pulses[0].band == Band{0, 3});
        CHECK(pulses[0].mean_amplitude == doctest::Approx(1020.0));
    }
    SUBCASE("two flat shoulders around a taller center") {
        const auto pulses = low_variation_runs(
            make({0, 1020, 1020, 2295, 1020, 1020, 0}), 0, 2);
        REQUIRE(pulses.size() == 2);
        CHECK(pulses[0].band == Band{1, 2});
        CHECK(pulses[1].band == Band{4, 5});
    }
    SUBCASE("loose epsilon yields overlapping maximal runs") {
        const auto pulses = low_variation_runs(make({1, 3, 5}), 2, 2);
        REQUIRE(pulses.size() == 2);
        CHECK(pulses[0].band == Band{0, 1});
        CHECK(pulses[0].mean_amplitude == doctest::Approx(2.0));
        CHECK(pulses[1].band == Band{1, 2});
        CHECK(pulses[1].mean_amplitude == doctest::Approx(4.0));
    }
    SUBCASE("zeros break runs") {
        const auto pulses =
            low_variation_runs(make({5, 5, 0, 5, 5, 5}), 0, 2);
        REQUIRE(pulses.size() == 2);
        CHECK(pulses[0].band == Band{0, 1});
        CHECK(pulses[1].band == Band{3, 5});
    }
    SUBCASE("min_len drops short runs") {
        CHECK(low_variation_runs(make({5, 0, 5}), 0, 2).empty());
        CHECK(low_variation_runs(make({5, 0, 5}), 0, 1).size() == 2);
    }
    SUBCASE("all zero") {
        CHECK(low_variation_runs(make({0, 0, 0}), 255, 1).empty());
    }
}

TEST_CASE("low_variation_runs matches the interval oracle") {
    std::mt19937 rng(211);
    for (int trial = 0; trial < 200; ++trial) {
        const auto v = oracle::random_profile(rng, 48, 5);
        const std::int64_t eps = 255 * static_cast<std::int64_t>(rng() % 5);
        const int min_len = 1 + static_cast<int>(rng() % 3);
        const auto got = low_variation_runs(make(v), eps, min_len);
        const auto want = oracle::low_variation_runs(v, eps, min_len);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].band == want[i].band);
            CHECK(got[i].mean_amplitude ==
                  doctest::Approx(want[i].mean_amplitude));
        }
    }
}

TEST_CASE("loosening epsilon never uncovers an index") {
    // every index inside some pulse at a tight epsilon stays covered when
    // epsilon grows (the runs themselves may merge or shift)
    std::mt19937 rng(223);
    for (int trial = 0; trial < 100; ++trial) {
        const auto v = oracle::random_profile(rng, 40, 5);
        const Profile p = make(v);
        const std::int64_t e1 = 255 * static_cast<std::int64_t>(rng() % 3);
        const std::int64_t e2 = e1 + 255 * static_cast<std::int64_t>(rng() % 3);
        std::set<int> tight, loose;
        for (const auto& pu : low_variation_runs(p, e1, 1))
            for (int i = pu.band.start; i <= pu.band.end; ++i)
                tight.insert(i);
        for (const auto& pu : low_variation_runs(p, e2, 1))
            for (int i = pu.band.start; i <= pu.band.end; ++i)
                loose.insert(i);
        for (int i : tight)
            CHECK(loose.count(i) == 1);
    }
}

TEST_CASE("step_edges frozen cases") {
    CHECK(step_edges(make({0, 0, 765, 765, 0})) == std::vector<int>{2, 4});
    CHECK(step_edges(make({0, 510, 0, 510, 0})) ==
          std::vector<int>{1, 2, 3, 4});
    // a run touching the end still closes with a falling edge
    CHECK(step_edges(make({0, 255})) == std::vector<int>{1, 2});
    CHECK(step_edges(make({255, 255})) == std::vector<int>{0, 2});
    CHECK(step_edges(make({0, 0, 0})).empty());
    CHECK(step_edges(make({})).empty());
}

TEST_CASE("step_edges pair up and match the oracle") {
    std::mt19937 rng(307);
    for (int trial = 0; trial < 200; ++trial) {
        const auto v = oracle::random_profile(rng, 48, 4, 0.5);
        const auto got = step_edges(make(v));
        CHECK(got == oracle::step_edges(v));
        // even count: each rising edge has its falling edge
        CHECK(got.size() % 2 == 0);
        for (std::size_t i = 1; i < got.size(); ++i)
            CHECK(got[i] > got[i - 1]);
        // between each pair all values are non-zero
        for (std::size_t i = 0; i + 1 < got.size(); i += 2)
            for (int j = got[i]; j < got[i + 1]; ++j)
                CHECK(v[static_cast<std::size_t>(j)] != 0);
    }
}

TEST_CASE("profile ops are translation equivariant") {
    // padding the image with blank rows/columns shifts bands by the pad
    std::mt19937 rng(401);
    for (int trial = 0; trial < 30; ++trial) {
        const InkImage img = oracle::random_mask(rng, 12, 12);
        const int pad = 1 + static_cast<int>(rng() % 4);
        InkImage shifted(img.width + pad, img.height);
        for (int y = 0; y < img.height; ++y)
            for (int x = 0; x < img.width; ++x)
                if (img.at(x, y))
                    shifted.set(x + pad, y, true);

        const auto base = threshold_bands(vertical_profile(img), 255, 1, 0);
        const auto moved =
            threshold_bands(vertical_profile(shifted), 255, 1, 0);
        REQUIRE(base.size() == moved.size());
        for (std::size_t i = 0; i < base.size(); ++i)
            CHECK(moved[i] == Band{base[i].start + pad, base[i].end + pad});
    }
}
