#include "terravis/fixtures.hpp"
#include "terravis/properties.hpp"

#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <numeric>
#include <set>

using namespace terravis;

TEST_CASE("ordered graph basics", "[properties]") {
    OrderedGraph g = OrderedGraph::from_edges(4, {{1, 0}, {0, 1}, {2, 3}});
    CHECK(g.neighbors(0) == std::vector<int>{1});
    CHECK(g.neighbors(1) == std::vector<int>{0}); // deduplicated, symmetric
    CHECK(g.edge_count() == 2);
    CHECK(g.closed_neighbors(1) == std::vector<int>{0, 1});
    CHECK(g.closed_neighbors(2) == std::vector<int>{2, 3});
    CHECK_THROWS_AS(g.neighbors(9), IndexError);
    CHECK_THROWS_AS(OrderedGraph::from_edges(2, {{0, 0}}), GraphError);
}

TEST_CASE("x-property on the reference graphs", "[properties]") {
    CHECK_FALSE(check_x_property(get_fixture("fig1").graph).has_value());
    CHECK_FALSE(check_x_property(get_fixture("antihole6").graph).has_value());
    // too few crossing edges to matter
    CHECK_FALSE(check_x_property(OrderedGraph::from_edges(3, {{0, 1}, {1, 2}})).has_value());
}

TEST_CASE("x-property violations come back lexicographically smallest", "[properties]") {
    // 0<1<2<3 with {0,2},{1,3} but no {0,3}
    OrderedGraph bad = OrderedGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}});
    auto w = check_x_property(bad);
    REQUIRE(w.has_value());
    CHECK(w->kind == WitnessKind::XViolation);
    CHECK(w->vertices == std::vector<int>{0, 1, 2, 3});

    // two violations; the smaller quadruple wins
    OrderedGraph two = OrderedGraph::from_edges(
        6, {{0, 2}, {1, 3}, {1, 4}, {2, 5}, {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    auto w2 = check_x_property(two);
    REQUIRE(w2.has_value());
    std::vector<int> q = w2->vertices;
    REQUIRE(q.size() == 4);
    CHECK(q[0] < q[1]);
    CHECK(q[1] < q[2]);
    CHECK(q[2] < q[3]);
    // verify minimality against an exhaustive scan
    std::vector<int> smallest;
    for (int p = 0; p < two.size() && smallest.empty(); ++p)
        for (int qq = p + 1; qq < two.size() && smallest.empty(); ++qq)
            for (int r = qq + 1; r < two.size() && smallest.empty(); ++r)
                for (int s = r + 1; s < two.size() && smallest.empty(); ++s)
                    if (two.has_edge(p, r) && two.has_edge(qq, s) && !two.has_edge(p, s))
                        smallest = {p, qq, r, s};
    CHECK(q == smallest);
}

TEST_CASE("bar property", "[properties]") {
    CHECK_FALSE(check_bar_property(get_fixture("fig1").graph).has_value());
    CHECK_FALSE(check_bar_property(OrderedGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}})).has_value());

    auto w = check_bar_property(OrderedGraph::from_edges(3, {{0, 2}}));
    REQUIRE(w.has_value());
    CHECK(w->kind == WitnessKind::BarViolation);
    CHECK(w->vertices == std::vector<int>{0, 2});
}

TEST_CASE("persistence verdicts", "[properties]") {
    CHECK(is_persistent(get_fixture("fig1").graph).persistent);

    auto anti = is_persistent(get_fixture("antihole6").graph);
    CHECK_FALSE(anti.persistent);
    REQUIRE(anti.witness.has_value());
    CHECK(anti.witness->kind == WitnessKind::NoHamPath);
    CHECK(anti.witness->vertices == std::vector<int>{0, 1});

    auto edgeless = is_persistent(OrderedGraph(2));
    CHECK_FALSE(edgeless.persistent);
    REQUIRE(edgeless.witness.has_value());
    CHECK(edgeless.witness->kind == WitnessKind::NoHamPath);
    CHECK(edgeless.witness->vertices == std::vector<int>{0, 1});
}

TEST_CASE("persistence under reordering", "[properties]") {
    CHECK_FALSE(is_persistent_any_order(get_fixture("unit-interval").graph));
    CHECK(is_persistent_any_order(OrderedGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}})));
    CHECK(is_persistent_any_order(get_fixture("fig1").graph));
    CHECK_THROWS_AS(is_persistent_any_order(OrderedGraph(11)), TooLarge);
}

TEST_CASE("reordering search agrees with plain permutation brute force", "[properties]") {
    // oracle: try every permutation without the Hamiltonian-path pruning
    auto naive = [](const OrderedGraph& g) {
        const int n = g.size();
        std::vector<int> pos(static_cast<std::size_t>(n));
        std::iota(pos.begin(), pos.end(), 0);
        do {
            std::vector<std::pair<int, int>> relabeled;
            for (int v = 0; v < n; ++v)
                for (int w : g.neighbors(v))
                    if (v < w)
                        relabeled.emplace_back(pos[static_cast<std::size_t>(v)],
                                               pos[static_cast<std::size_t>(w)]);
            if (is_persistent(OrderedGraph::from_edges(n, relabeled)).persistent) return true;
        } while (std::next_permutation(pos.begin(), pos.end()));
        return false;
    };

    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 40; ++trial) {
        int n = static_cast<int>(testsupport::draw(rng, 1, 6));
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (testsupport::draw(rng, 0, 1)) edges.emplace_back(u, v);
        OrderedGraph g = OrderedGraph::from_edges(n, edges);
        INFO("trial " << trial << " n " << n);
        CHECK(is_persistent_any_order(g) == naive(g));
    }
}

TEST_CASE("antihole search", "[properties]") {
    auto w = find_antihole(get_fixture("antihole6").graph, 6);
    REQUIRE(w.has_value());
    CHECK(w->kind == WitnessKind::Antihole);
    CHECK(w->vertices == std::vector<int>{0, 1, 2, 3, 4, 5});

    CHECK_FALSE(find_antihole(get_fixture("fig1").graph, 6).has_value());
    CHECK_FALSE(find_antihole(OrderedGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}), 6).has_value());
    CHECK_THROWS_AS(find_antihole(OrderedGraph(100), 6), TooLarge);
}

TEST_CASE("antihole search agrees with subset brute force", "[properties]") {
    auto subsets_have_antihole = [](const OrderedGraph& g, int k) {
        std::vector<int> pick;
        std::function<bool(int)> rec = [&](int start) -> bool {
            if (static_cast<int>(pick.size()) == k) {
                for (int v : pick) { // complement must be 2-regular on the subset
                    int non = 0;
                    for (int u : pick)
                        if (u != v && !g.has_edge(u, v)) ++non;
                    if (non != 2) return false;
                }
                int start_v = pick[0], prev = -1, cur = pick[0], steps = 0;
                do {
                    for (int u : pick)
                        if (u != cur && u != prev && !g.has_edge(u, cur)) {
                            prev = cur;
                            cur = u;
                            break;
                        }
                    ++steps;
                } while (cur != start_v && steps <= k);
                return cur == start_v && steps == k;
            }
            for (int v = start; v < g.size(); ++v) {
                pick.push_back(v);
                if (rec(v + 1)) return true;
                pick.pop_back();
            }
            return false;
        };
        return rec(0);
    };

    std::mt19937_64 rng(1414);
    int positives = 0;
    for (int trial = 0; trial < 30; ++trial) {
        int n = static_cast<int>(testsupport::draw(rng, 5, 12));
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (testsupport::draw(rng, 0, 2)) edges.emplace_back(u, v);
        OrderedGraph g = OrderedGraph::from_edges(n, edges);
        for (int k : {5, 6}) {
            bool expected = subsets_have_antihole(g, k);
            positives += expected;
            INFO("trial " << trial << " k " << k);
            CHECK(find_antihole(g, k).has_value() == expected);
        }
    }
    CHECK(positives > 0); // dense random graphs do contain some antiholes
}

TEST_CASE("antiholes never appear in visibility graphs", "[properties]") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        Terrain t = testsupport::random_terrain(rng, static_cast<int>(testsupport::draw(rng, 6, 30)));
        OrderedGraph g = build_visibility_graph(t);
        CHECK_FALSE(find_antihole(g, 6).has_value());
        CHECK_FALSE(find_antihole(g, 7).has_value());
    }
}

TEST_CASE("induced cycle order law", "[properties]") {
    Fixture c6 = get_fixture("c6-terrain");
    std::vector<int> cycle = c6_fixture_cycle();
    CHECK(check_cycle_order(c6.graph, cycle));

    // p1<p2<p3<p4 cannot be an induced C4 order in a persistent graph;
    // build such a cycle in a synthetic (non-persistent) graph
    OrderedGraph synthetic = OrderedGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK_FALSE(check_cycle_order(synthetic, {0, 1, 2, 3}));

    CHECK_THROWS_AS(check_cycle_order(synthetic, {0, 1, 2}), NotInducedCycle);
    CHECK_THROWS_AS(check_cycle_order(synthetic, {0, 2, 1, 3}), NotInducedCycle);
    CHECK_THROWS_AS(check_cycle_order(get_fixture("fig1").graph, {0, 1, 2, 3}), NotInducedCycle);
}

TEST_CASE("induced cycles in visibility graphs satisfy the order law", "[properties]") {
    std::vector<OrderedGraph> graphs;
    for (int k = 4; k <= 7; ++k) // tower terrains contribute one k-cycle each
        graphs.push_back(build_visibility_graph(testsupport::towers_terrain(k)));
    graphs.push_back(get_fixture("c6-terrain").graph);
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 25; ++trial)
        graphs.push_back(build_visibility_graph(testsupport::random_terrain(
            rng, static_cast<int>(testsupport::draw(rng, 4, 14)), 30)));

    int cycles_seen = 0;
    for (const OrderedGraph& g : graphs) {
        for (int k = 4; k <= 7; ++k) {
            enumerate_induced_cycles(g, k, [&](const std::vector<int>& cycle) {
                ++cycles_seen;
                CHECK(check_cycle_order(g, cycle));
                return true;
            });
        }
    }
    CHECK(cycles_seen >= 5); // the law must actually have been exercised
}

TEST_CASE("cycle enumeration agrees with subset brute force", "[properties]") {
    // subset oracle: a k-subset induces a cycle iff every vertex has
    // induced degree 2 and the induced subgraph is connected
    auto count_by_subsets = [](const OrderedGraph& g, int k) {
        int found = 0;
        std::vector<int> pick;
        std::function<void(int)> rec = [&](int start) {
            if (static_cast<int>(pick.size()) == k) {
                for (int v : pick) {
                    int deg = 0;
                    for (int u : pick)
                        if (u != v && g.has_edge(u, v)) ++deg;
                    if (deg != 2) return;
                }
                // walk the 2-regular induced graph; one cycle iff it closes after k steps
                int start_v = pick[0], prev = -1, cur = pick[0], steps = 0;
                do {
                    for (int u : pick)
                        if (u != cur && u != prev && g.has_edge(u, cur)) {
                            prev = cur;
                            cur = u;
                            break;
                        }
                    ++steps;
                } while (cur != start_v && steps <= k);
                if (cur == start_v && steps == k) ++found;
                return;
            }
            for (int v = start; v < g.size(); ++v) {
                pick.push_back(v);
                rec(v + 1);
                pick.pop_back();
            }
        };
        rec(0);
        return found;
    };

    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 20; ++trial) {
        // generic random graphs, not just visibility graphs
        int n = static_cast<int>(testsupport::draw(rng, 4, 9));
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (testsupport::draw(rng, 0, 2)) edges.emplace_back(u, v);
        OrderedGraph g = OrderedGraph::from_edges(n, edges);
        for (int k = 3; k <= 6; ++k) {
            int enumerated = 0;
            enumerate_induced_cycles(g, k, [&](const std::vector<int>&) {
                ++enumerated;
                return true;
            });
            INFO("trial " << trial << " k " << k);
            CHECK(enumerated == count_by_subsets(g, k));
        }
    }
}

TEST_CASE("induced C4s put the leftmost pair opposite", "[properties]") {
    std::vector<OrderedGraph> graphs{build_visibility_graph(testsupport::towers_terrain(4))};
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 30; ++trial)
        graphs.push_back(build_visibility_graph(testsupport::random_terrain(rng, 12, 25)));

    int seen = 0;
    for (const OrderedGraph& g : graphs) {
        enumerate_induced_cycles(g, 4, [&](const std::vector<int>& cycle) {
            ++seen;
            std::vector<int> sorted = cycle;
            std::sort(sorted.begin(), sorted.end());
            // cycle = (c0,c1,c2,c3) in cyclic order; opposite pairs are
            // (c0,c2) and (c1,c3); the two leftmost must be one of them
            int a = sorted[0], b = sorted[1];
            auto pos = [&](int v) {
                return static_cast<int>(std::find(cycle.begin(), cycle.end(), v) - cycle.begin());
            };
            CHECK((pos(a) + 2) % 4 == pos(b) % 4);
            CHECK_FALSE(g.has_edge(a, b));
            return true;
        });
    }
    CHECK(seen > 0);
}

TEST_CASE("blocked sightlines leave a common neighbor behind", "[properties]") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 10; ++trial) {
        Terrain t = testsupport::random_terrain(rng, 25, 50);
        OrderedGraph g = build_visibility_graph(t);
        for (int p = 0; p < g.size(); ++p) {
            for (int q : g.neighbors(p)) {
                if (q <= p) continue;
                for (int r : g.neighbors(p)) {
                    if (r <= q || g.has_edge(q, r)) continue;
                    bool found = false;
                    for (int b = q + 1; b < r && !found; ++b)
                        found = g.has_edge(p, b) && g.has_edge(q, b);
                    CHECK(found);
                }
            }
        }
    }
}

TEST_CASE("degree sequence and bfs basics", "[properties]") {
    CHECK(degree_sequence(OrderedGraph(3)) == std::vector<int>{0, 0, 0});

    const OrderedGraph& fig1 = get_fixture("fig1").graph;
    CHECK(bfs_distance(fig1, 1, 5) == 2);
    CHECK(bfs_distance(fig1, 2, 2) == 0);
    CHECK_FALSE(bfs_distance(OrderedGraph(2), 0, 1).has_value());

    auto path = bfs_path(fig1, 1, 5);
    REQUIRE(path.has_value());
    CHECK(path->size() == 3);
    CHECK(path->front() == 1);
    CHECK(path->back() == 5);
}

TEST_CASE("g1 and g2 are not isomorphic", "[properties]") {
    // same degree sequence, but only one of them gives the unique
    // degree-3 vertex a degree-7 neighbor
    auto has_deg7_neighbor_of_deg3 = [](const OrderedGraph& g) {
        auto degs = degree_sequence(g);
        int v3 = -1;
        for (int v = 0; v < g.size(); ++v)
            if (degs[static_cast<std::size_t>(v)] == 3) {
                REQUIRE(v3 == -1);
                v3 = v;
            }
        REQUIRE(v3 >= 0);
        for (int u : g.neighbors(v3))
            if (degs[static_cast<std::size_t>(u)] == 7) return true;
        return false;
    };
    bool a = has_deg7_neighbor_of_deg3(get_fixture("g1").graph);
    bool b = has_deg7_neighbor_of_deg3(get_fixture("g2").graph);
    CHECK(a != b);
}

TEST_CASE("induced subgraphs", "[properties]") {
    const OrderedGraph& fig1 = get_fixture("fig1").graph;
    CHECK(induced_subgraph(fig1, {0, 1, 2, 3, 4, 5}) == fig1);

    OrderedGraph dropped = induced_subgraph(fig1, {0, 1, 2, 4, 5});
    CHECK(dropped.size() == 5);
    CHECK_FALSE(check_x_property(dropped).has_value());

    OrderedGraph single = induced_subgraph(fig1, {3});
    CHECK(single.size() == 1);
    CHECK(single.edge_count() == 0);
    CHECK_THROWS_AS(induced_subgraph(fig1, {99}), IndexError);
}

TEST_CASE("induced subgraphs keep the x-property", "[properties]") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 15; ++trial) {
        Terrain t = testsupport::random_terrain(rng, 40);
        OrderedGraph g = build_visibility_graph(t);
        std::vector<int> keep;
        for (int v = 0; v < g.size(); ++v)
            if (testsupport::draw(rng, 0, 1)) keep.push_back(v);
        if (keep.size() < 4) continue;
        CHECK_FALSE(check_x_property(induced_subgraph(g, keep)).has_value());
    }
}
