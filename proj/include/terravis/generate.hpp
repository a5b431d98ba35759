#pragma once

#include "terravis/funnel.hpp"
#include "terravis/terrain.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace terravis {

struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

/// Uniform integer in [lo, hi] from the engine's raw 64-bit stream.
/// Hand-rolled rejection so byte-identical output does not depend on the
/// standard library's distribution implementation.
inline std::int64_t bounded(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t raw;
    do {
        raw = rng();
    } while (raw >= limit);
    return lo + static_cast<std::int64_t>(raw % span);
}

/// k distinct integers in [lo, hi], ascending.
inline std::vector<std::int64_t> distinct_sorted(std::mt19937_64& rng, int k, std::int64_t lo,
                                                 std::int64_t hi) {
    std::set<std::int64_t> vals;
    while (static_cast<int>(vals.size()) < k) vals.insert(bounded(rng, lo, hi));
    return {vals.begin(), vals.end()};
}

} // namespace detail

/// Random terrain with x = 0..n-1 and uniform integer heights in
/// [-coord_range, coord_range]. Deterministic per seed.
inline Terrain generate_terrain(int n, std::uint64_t seed, std::int64_t coord_range = 1000) {
    if (n < 2) throw GenerationError("a terrain needs at least 2 vertices");
    if (coord_range < 1 || coord_range > (std::int64_t{1} << 60))
        throw GenerationError("coordinate range out of bounds");
    std::mt19937_64 rng(seed);
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        pts.push_back({Rational(i), Rational(detail::bounded(rng, -coord_range, coord_range))});
    return Terrain(std::move(pts));
}

/// Random funnel terrain with one convex bottom and mutually visible
/// endpoints. Chains are built from strictly monotone slope sequences
/// (concave on each side), then one extreme slope is nudged so the
/// endpoint sight line clears everything; validated post-hoc.
inline Terrain generate_funnel(int n, std::uint64_t seed, std::int64_t coord_range = 1000) {
    if (n < 3) throw GenerationError("a funnel needs at least 3 vertices");
    if (coord_range < 1 || coord_range > (std::int64_t{1} << 60))
        throw GenerationError("coordinate range out of bounds");
    std::mt19937_64 rng(seed);

    for (int attempt = 0; attempt < 200; ++attempt) {
        const int bottom = static_cast<int>(detail::bounded(rng, 1, n - 2));
        const int left_segments = bottom;
        const int right_segments = n - 1 - bottom;
        const std::int64_t slope_cap = std::max<std::int64_t>(4, 2 * n);

        // left drops get steeper toward the bottom, right rises flatten out
        std::vector<std::int64_t> sigma =
            detail::distinct_sorted(rng, left_segments, 1, slope_cap);
        std::vector<std::int64_t> delta =
            detail::distinct_sorted(rng, right_segments, 1, slope_cap);

        std::int64_t sum_sigma = 0, sum_delta = 0;
        for (auto v : sigma) sum_sigma += v;
        for (auto v : delta) sum_delta += v;

        // endpoint visibility needs the top chord to clear both chains:
        //   -sigma_min * (n-1) < sum_delta - sum_sigma < delta_min * (n-1)
        const std::int64_t lo = -sigma.front() * (n - 1) + 1;
        const std::int64_t hi = delta.front() * (n - 1) - 1;
        const std::int64_t target = lo + (hi - lo) / 2;
        std::int64_t diff = sum_delta - sum_sigma;
        if (diff > target)
            sigma.back() += diff - target; // steepest left drop absorbs the excess
        else
            delta.back() += target - diff; // steepest right rise does
        // delta is ascending here; slopes are consumed in reverse below

        std::vector<Point> pts(static_cast<std::size_t>(n));
        pts[static_cast<std::size_t>(bottom)] = {Rational(bottom), Rational(0)};
        std::int64_t y = 0;
        for (int i = bottom - 1; i >= 0; --i) { // drop magnitudes ascend toward the bottom
            y += sigma[static_cast<std::size_t>(i)];
            pts[static_cast<std::size_t>(i)] = {Rational(i), Rational(y)};
        }
        y = 0;
        for (int i = bottom + 1; i < n; ++i) { // rise delta descending away from bottom
            y += delta[static_cast<std::size_t>(n - 1 - i)];
            pts[static_cast<std::size_t>(i)] = {Rational(i), Rational(y)};
        }

        bool in_range = true;
        for (const Point& p : pts)
            if (p.y > coord_range || p.y < -coord_range) in_range = false;
        if (!in_range) continue;

        Terrain t(std::move(pts));
        try {
            Funnel::from_terrain(t);
        } catch (const NotAFunnel&) {
            continue;
        }
        return t;
    }
    throw GenerationError("could not generate a funnel within the coordinate range");
}

} // namespace terravis
