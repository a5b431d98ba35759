#pragma once

#include "terravis/ordered_graph.hpp"
#include "terravis/terrain.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace terravis {

struct UnknownFixture : std::invalid_argument {
    explicit UnknownFixture(const std::string& name)
        : std::invalid_argument("unknown fixture '" + name + "'") {}
};

/// A named example instance: always a graph, plus the terrain it was
/// built from when the fixture is geometric.
struct Fixture {
    std::string name;
    std::optional<Terrain> terrain;
    OrderedGraph graph;
};

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{
        "fig1", "g1", "g2", "antihole6", "unit-interval", "c6-terrain", "funnel-fig"};
    return names;
}

/// Embedded example instances. The geometric ones are exact coordinates;
/// their graphs are built by the visibility sweep.
inline Fixture get_fixture(const std::string& name) {
    auto from_terrain = [&](const char* text) {
        Terrain t = parse_terrain(text);
        OrderedGraph g = build_visibility_graph(t);
        return Fixture{name, std::move(t), std::move(g)};
    };

    if (name == "fig1") return from_terrain("0 2\n1 0\n2 1\n2.5 -1\n3.5 4\n5 3\n");
    if (name == "g1")
        return from_terrain("0 30\n1 18\n2 15\n3 19\n4 21\n5 20\n6 2\n7 0\n8 4\n9 15\n10 18\n");
    if (name == "g2")
        return from_terrain("0 140\n1 74\n2 0\n3 16\n4 70\n5 66\n6 38\n7 32\n8 24\n9 42\n10 45\n");
    if (name == "c6-terrain")
        return from_terrain("0 37\n5 32\n6 12\n16 14\n20 14\n30 12\n31 32\n36 37\n");
    if (name == "funnel-fig")
        return from_terrain("-3 3.5\n-2 3\n-1 2\n0 0\n0.5 1.7\n1 2.5\n2 2.8\n");
    if (name == "antihole6") {
        // size-6 antihole ordered so that the X-property holds
        return Fixture{name, std::nullopt,
                       OrderedGraph::from_edges(
                           6, {{0, 5}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {1, 2}, {3, 4}, {2, 3}, {1, 4}})};
    }
    if (name == "unit-interval") {
        // connected unit interval graph that is not persistent in any order
        return Fixture{name, std::nullopt,
                       OrderedGraph::from_edges(
                           6, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5}})};
    }
    throw UnknownFixture(name);
}

/// The induced 6-cycle of the c6-terrain fixture, in cycle order.
inline std::vector<int> c6_fixture_cycle() { return {7, 0, 5, 4, 3, 2}; }

} // namespace terravis
