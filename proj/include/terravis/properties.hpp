#pragma once

#include "terravis/ordered_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

namespace terravis {

namespace detail {

/// Largest neighbor of v strictly below `bound`, or nullopt.
inline std::optional<int> max_neighbor_below(const OrderedGraph& g, int v, int bound) {
    const auto& nb = g.neighbors(v);
    auto it = std::lower_bound(nb.begin(), nb.end(), bound);
    if (it == nb.begin()) return std::nullopt;
    return *std::prev(it);
}

/// Smallest neighbor of v strictly above `bound`, or nullopt.
inline std::optional<int> min_neighbor_above(const OrderedGraph& g, int v, int bound) {
    const auto& nb = g.neighbors(v);
    auto it = std::upper_bound(nb.begin(), nb.end(), bound);
    if (it == nb.end()) return std::nullopt;
    return *it;
}

/// Lexicographically smallest X-property violation (p,q,r,s) for fixed p,
/// assuming one exists.
inline Witness smallest_x_witness_for(const OrderedGraph& g, int p) {
    const int n = g.size();
    for (int q = p + 1; q < n; ++q) {
        const auto& np = g.neighbors(p);
        for (auto it = std::upper_bound(np.begin(), np.end(), q); it != np.end(); ++it) {
            int r = *it;
            const auto& nq = g.neighbors(q);
            for (auto jt = std::upper_bound(nq.begin(), nq.end(), r); jt != nq.end(); ++jt) {
                int s = *jt;
                if (!g.has_edge(p, s))
                    return Witness{WitnessKind::XViolation, {p, q, r, s}};
            }
        }
    }
    throw GraphError("internal: X violation vanished during witness minimization");
}

} // namespace detail

/// X-property: p<q<r<s with {p,r},{q,s} in E implies {p,s} in E.
/// Returns the lexicographically smallest violating quadruple, or nullopt.
///
/// A violation with endpoints (p,s), {p,s} not in E, exists iff
/// min(N(s) above p) < max(N(p) below s); scanning all pairs gives
/// O(n^2 log n), better than iterating crossing edge pairs.
inline std::optional<Witness> check_x_property(const OrderedGraph& g) {
    const int n = g.size();
    for (int p = 0; p < n; ++p) {
        for (int s = p + 3; s < n; ++s) {
            if (g.has_edge(p, s)) continue;
            auto r = detail::max_neighbor_below(g, p, s);
            if (!r || *r <= p + 1) continue;
            auto q = detail::min_neighbor_above(g, s, p);
            if (q && *q < *r) return detail::smallest_x_witness_for(g, p);
        }
    }
    return std::nullopt;
}

/// bar-property: every edge {p,q} with q > p+1 has a vertex strictly
/// between that is adjacent to both. Returns the first violating edge in
/// lexicographic order, or nullopt.
inline std::optional<Witness> check_bar_property(const OrderedGraph& g) {
    for (auto [p, q] : g.edges()) {
        if (q <= p + 1) continue;
        const auto& np = g.neighbors(p);
        bool found = false;
        for (auto it = std::upper_bound(np.begin(), np.end(), p); it != np.end() && *it < q; ++it) {
            if (g.has_edge(*it, q)) {
                found = true;
                break;
            }
        }
        if (!found) return Witness{WitnessKind::BarViolation, {p, q}};
    }
    return std::nullopt;
}

struct PersistenceCheck {
    bool persistent = false;
    std::optional<Witness> witness;
};

/// Persistent: Hamiltonian path along the order plus X- and bar-property.
/// Checks in that sequence and reports the first failure.
inline PersistenceCheck is_persistent(const OrderedGraph& g) {
    for (int i = 0; i + 1 < g.size(); ++i)
        if (!g.has_edge(i, i + 1))
            return {false, Witness{WitnessKind::NoHamPath, {i, i + 1}}};
    if (auto w = check_x_property(g)) return {false, w};
    if (auto w = check_bar_property(g)) return {false, w};
    return {true, std::nullopt};
}

/// True iff some vertex ordering makes the graph persistent. Factorial
/// search pruned to Hamiltonian-path orders; guarded to n <= 10.
inline bool is_persistent_any_order(const OrderedGraph& g) {
    const int n = g.size();
    if (n > 10) throw TooLarge("is_persistent_any_order is limited to n <= 10");
    if (n <= 1) return true;

    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::vector<int> position(static_cast<std::size_t>(n), -1);

    std::function<bool()> extend = [&]() -> bool {
        if (static_cast<int>(order.size()) == n) {
            // reversal symmetry: persistence is invariant under order reversal
            if (order.front() > order.back()) return false;
            std::vector<std::pair<int, int>> relabeled;
            for (int v = 0; v < n; ++v)
                for (int w : g.neighbors(v))
                    if (v < w) relabeled.emplace_back(position[v], position[w]);
            return is_persistent(OrderedGraph::from_edges(n, relabeled)).persistent;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            if (!order.empty() && !g.has_edge(order.back(), v)) continue;
            used[static_cast<std::size_t>(v)] = true;
            position[static_cast<std::size_t>(v)] = static_cast<int>(order.size());
            order.push_back(v);
            if (extend()) return true;
            order.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
        return false;
    };
    return extend();
}

/// Enumerates all induced k-cycles, invoking fn with the cycle in cyclic
/// order starting at its smallest vertex (each cycle reported once).
/// Plain backtracking; stops early when fn returns false.
inline void enumerate_induced_cycles(const OrderedGraph& g, int k,
                                     const std::function<bool(const std::vector<int>&)>& fn) {
    if (k < 3) return;
    const int n = g.size();
    std::vector<int> path;
    path.reserve(static_cast<std::size_t>(k));
    std::vector<bool> on_path(static_cast<std::size_t>(n), false);
    bool stop = false;

    std::function<void()> grow = [&]() {
        if (stop) return;
        const int last = path.back();
        const int root = path.front();
        if (static_cast<int>(path.size()) == k - 1) {
            // closing vertex: adjacent to last and root, non-adjacent to the rest
            for (int w : g.neighbors(last)) {
                if (stop) return;
                if (w <= root || on_path[static_cast<std::size_t>(w)]) continue;
                if (!g.has_edge(w, root)) continue;
                if (path.size() > 1 && w < path[1]) continue; // reflection dedupe
                bool induced = true;
                for (std::size_t i = 1; i + 1 < path.size(); ++i)
                    if (g.has_edge(w, path[i])) {
                        induced = false;
                        break;
                    }
                if (!induced) continue;
                path.push_back(w);
                if (!fn(path)) stop = true;
                path.pop_back();
            }
            return;
        }
        for (int w : g.neighbors(last)) {
            if (stop) return;
            if (w <= root || on_path[static_cast<std::size_t>(w)]) continue;
            bool induced = true;
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                if (g.has_edge(w, path[i])) {
                    induced = false;
                    break;
                }
            if (!induced) continue;
            on_path[static_cast<std::size_t>(w)] = true;
            path.push_back(w);
            grow();
            path.pop_back();
            on_path[static_cast<std::size_t>(w)] = false;
        }
    };

    for (int v0 = 0; v0 < n && !stop; ++v0) {
        path.assign(1, v0);
        on_path.assign(static_cast<std::size_t>(n), false);
        on_path[static_cast<std::size_t>(v0)] = true;
        grow();
    }
}

inline OrderedGraph complement(const OrderedGraph& g) {
    const int n = g.size();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return OrderedGraph::from_edges(n, edges);
}

/// Searches for k vertices inducing the complement of a k-cycle, k >= 5.
/// Guarded by C(n,k) <= 10^7 as an explicit size cap.
inline std::optional<Witness> find_antihole(const OrderedGraph& g, int k) {
    if (k < 5) throw GraphError("antiholes start at size 5");
    const int n = g.size();
    double subsets = 1.0;
    for (int i = 0; i < k; ++i) subsets *= static_cast<double>(n - i) / (i + 1);
    if (subsets > 1e7) throw TooLarge("find_antihole guard: C(n,k) exceeds 10^7");
    if (n < k) return std::nullopt;

    // an antihole of size k is an induced k-cycle of the complement
    std::optional<Witness> found;
    enumerate_induced_cycles(complement(g), k, [&](const std::vector<int>& cycle) {
        std::vector<int> verts = cycle;
        std::sort(verts.begin(), verts.end());
        found = Witness{WitnessKind::Antihole, verts};
        return false;
    });
    return found;
}

struct NotInducedCycle : GraphError {
    using GraphError::GraphError;
};

/// Verifies the listed vertices form an induced cycle in listed order,
/// then tests whether some rotation or reversal satisfies
/// p1 > p3 > p4 > ... > pk > p2 in the vertex order.
inline bool check_cycle_order(const OrderedGraph& g, const std::vector<int>& cycle) {
    const int k = static_cast<int>(cycle.size());
    if (k < 4) throw NotInducedCycle("cycle must have at least 4 vertices");
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw NotInducedCycle("repeated vertex");
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.has_edge(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>(j)]) !=
                consecutive)
                throw NotInducedCycle("listed vertices do not induce a cycle in this order");
        }
    }

    auto matches = [&](int start, int dir) {
        auto at = [&](int i) {
            int idx = (start + dir * i) % k;
            if (idx < 0) idx += k;
            return cycle[static_cast<std::size_t>(idx)];
        };
        // chain p1 > p3 > p4 > ... > pk > p2
        int prev = at(0);
        for (int i = 2; i < k; ++i) {
            if (!(prev > at(i))) return false;
            prev = at(i);
        }
        return prev > at(1);
    };
    for (int start = 0; start < k; ++start)
        for (int dir : {1, -1})
            if (matches(start, dir)) return true;
    return false;
}

/// Degree of vertex i at position i.
inline std::vector<int> degree_sequence(const OrderedGraph& g) {
    std::vector<int> out(static_cast<std::size_t>(g.size()));
    for (int v = 0; v < g.size(); ++v) out[static_cast<std::size_t>(v)] = g.degree(v);
    return out;
}

/// All unweighted distances from s; -1 marks unreachable vertices.
inline std::vector<int> bfs_all_distances(const OrderedGraph& g, int s) {
    g.check_vertex(s);
    std::vector<int> dist(static_cast<std::size_t>(g.size()), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

/// Exact unweighted shortest-path length; nullopt when disconnected.
inline std::optional<int> bfs_distance(const OrderedGraph& g, int s, int t) {
    g.check_vertex(t);
    int d = bfs_all_distances(g, s)[static_cast<std::size_t>(t)];
    if (d < 0) return std::nullopt;
    return d;
}

/// One shortest s-t path found by BFS, or nullopt. Oracle-side helper.
inline std::optional<std::vector<int>> bfs_path(const OrderedGraph& g, int s, int t) {
    g.check_vertex(t);
    auto dist = bfs_all_distances(g, s);
    if (dist[static_cast<std::size_t>(t)] < 0) return std::nullopt;
    std::vector<int> path{t};
    int cur = t;
    while (cur != s) {
        for (int w : g.neighbors(cur)) {
            if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(cur)] - 1) {
                cur = w;
                break;
            }
        }
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

/// Subgraph induced by `keep` with inherited order; indices are remapped
/// to 0..|keep|-1 in ascending original order.
inline OrderedGraph induced_subgraph(const OrderedGraph& g, std::vector<int> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> remap(static_cast<std::size_t>(g.size()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        g.check_vertex(keep[i]);
        remap[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u : keep)
        for (int v : g.neighbors(u))
            if (u < v && remap[static_cast<std::size_t>(v)] >= 0)
                edges.emplace_back(remap[static_cast<std::size_t>(u)],
                                   remap[static_cast<std::size_t>(v)]);
    return OrderedGraph::from_edges(static_cast<int>(keep.size()), edges);
}

} // namespace terravis
