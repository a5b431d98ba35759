#pragma once

// Shared helpers for the test suites: the naive visibility oracle and a
// couple of deterministic instance builders. Oracles here stay
// independent of the library's construction paths.

#include "terravis/ordered_graph.hpp"
#include "terravis/terrain.hpp"

#include <random>
#include <utility>
#include <vector>

namespace testsupport {

/// All-pairs O(n^3) visibility graph straight from the predicate.
inline terravis::OrderedGraph naive_visibility_graph(const terravis::Terrain& t) {
    const int n = static_cast<int>(t.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (t.sees(static_cast<std::size_t>(i), static_cast<std::size_t>(j)))
                edges.emplace_back(i, j);
    return terravis::OrderedGraph::from_edges(n, edges);
}

inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng() % span);
}

/// Random terrain built directly here (not via the library generator).
inline terravis::Terrain random_terrain(std::mt19937_64& rng, int n, std::int64_t range = 1000) {
    std::vector<terravis::Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        pts.push_back({terravis::Rational(i), terravis::Rational(draw(rng, -range, range))});
    return terravis::Terrain(std::move(pts));
}

/// Two towers flanking a k-2 vertex dome: the visibility graph contains
/// exactly one induced k-cycle (k = 4..7).
inline terravis::Terrain towers_terrain(int k) {
    using terravis::Point;
    using terravis::Rational;
    static const std::vector<std::vector<int>> mids{
        {6, 30}, {6, 18, 30}, {6, 16, 20, 30}, {6, 14, 18, 22, 30}};
    const auto& xs = mids.at(static_cast<std::size_t>(k - 4));
    std::vector<Point> pts{{Rational(0), Rational(37)}, {Rational(5), Rational(32)}};
    for (std::size_t i = 0; i < xs.size(); ++i)
        pts.push_back({Rational(xs[i]), Rational(i == 0 || i + 1 == xs.size() ? 12 : 14)});
    pts.push_back({Rational(31), Rational(32)});
    pts.push_back({Rational(36), Rational(37)});
    return terravis::Terrain(std::move(pts));
}

} // namespace testsupport
