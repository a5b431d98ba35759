#pragma once

#include "terravis/ordered_graph.hpp"
#include "terravis/properties.hpp"
#include "terravis/terrain.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace terravis {

enum class Chain : std::uint8_t { L, R };

/// A funnel vertex named by chain and index; the bottom is canonically
/// (L, 0) and identified with (R, 0).
struct ChainVertex {
    Chain chain;
    int index;

    friend bool operator==(const ChainVertex& a, const ChainVertex& b) {
        if (a.index == 0 && b.index == 0) return true; // bottom on either chain
        return a.chain == b.chain && a.index == b.index;
    }
};

struct NotAFunnel : TerrainError {
    enum class Reason { MultipleConvex, NoConvex, EndpointsNotVisible };

    explicit NotAFunnel(Reason r) : TerrainError(std::string("not a funnel: ") + text(r)), reason(r) {}

    static const char* text(Reason r) {
        switch (r) {
        case Reason::MultipleConvex: return "multiple-convex";
        case Reason::NoConvex: return "no-convex";
        case Reason::EndpointsNotVisible: return "endpoints-not-visible";
        }
        return "?";
    }

    Reason reason;
};

struct IntervalViolation : GraphError {
    explicit IntervalViolation(int vertex)
        : GraphError("neighborhood of funnel vertex " + std::to_string(vertex) +
                     " is not an interval on a chain"),
          vertex(vertex) {}
    int vertex;
};

struct FunnelFormatError : GraphError {
    using GraphError::GraphError;
};

/// Two chains around a unique convex bottom. Internally the vertices are
/// numbered 0 = bottom, 1..nL = lambda_1..lambda_nL, nL+1..nL+nR =
/// rho_1..rho_nR, which sorts them by (chain, index).
class Funnel {
public:
    /// Splits a terrain at its unique convex vertex. The chains run
    /// bottom-up (increasing y).
    static Funnel from_terrain(const Terrain& t) {
        const auto classes = classify_vertices(t);
        int bottom = -1;
        for (std::size_t v = 0; v < classes.size(); ++v) {
            if (classes[v] == VertexClass::Convex) {
                if (bottom >= 0) throw NotAFunnel(NotAFunnel::Reason::MultipleConvex);
                bottom = static_cast<int>(v);
            }
        }
        if (bottom < 0) throw NotAFunnel(NotAFunnel::Reason::NoConvex);
        if (!t.sees(0, t.size() - 1)) throw NotAFunnel(NotAFunnel::Reason::EndpointsNotVisible);

        Funnel f;
        f.nl_ = bottom;
        f.nr_ = static_cast<int>(t.size()) - 1 - bottom;
        f.terrain_index_.resize(static_cast<std::size_t>(f.vertex_count()));
        for (int id = 0; id < f.vertex_count(); ++id)
            f.terrain_index_[static_cast<std::size_t>(id)] =
                id <= f.nl_ ? bottom - id : bottom + (id - f.nl_);

        const OrderedGraph vis = build_visibility_graph(t);
        std::vector<int> to_id(t.size());
        for (int id = 0; id < f.vertex_count(); ++id)
            to_id[static_cast<std::size_t>(f.terrain_index_[static_cast<std::size_t>(id)])] = id;
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : vis.edges())
            edges.emplace_back(to_id[static_cast<std::size_t>(u)],
                               to_id[static_cast<std::size_t>(v)]);
        f.graph_ = OrderedGraph::from_edges(f.vertex_count(), edges);
        f.validate_chain_structure();
#ifndef NDEBUG
        for (int id = 1; id < f.vertex_count(); ++id) { // chains rise in y
            ChainVertex cv = f.label(id);
            if (cv.index == 0) continue;
            int below = f.id({cv.chain, cv.index - 1});
            assert(t[static_cast<std::size_t>(f.terrain_index_[static_cast<std::size_t>(id)])].y >
                   t[static_cast<std::size_t>(f.terrain_index_[static_cast<std::size_t>(below)])].y);
        }
#endif
        return f;
    }

    /// Builds from a chain-labeled graph (no geometry). Validates chain
    /// Hamiltonicity, the endpoint edge, and the X-property of the
    /// reconstructed terrain order, all of which hold for every funnel
    /// visibility graph.
    static Funnel from_chains(int nl, int nr, const std::vector<std::pair<ChainVertex, ChainVertex>>& edges) {
        if (nl < 1 || nr < 1) throw FunnelFormatError("each chain needs at least one vertex");
        Funnel f;
        f.nl_ = nl;
        f.nr_ = nr;
        std::vector<std::pair<int, int>> raw;
        raw.reserve(edges.size());
        for (auto [a, b] : edges) {
            int u = f.id(a), v = f.id(b);
            if (u == v) throw FunnelFormatError("self-loop in funnel edge list");
            raw.emplace_back(u, v);
        }
        f.graph_ = OrderedGraph::from_edges(f.vertex_count(), raw);
        f.validate_chain_structure();
        if (check_x_property(f.terrain_order_graph()))
            throw FunnelFormatError("chain-labeled graph violates the X-property in terrain order");
        return f;
    }

    int chain_length(Chain c) const { return c == Chain::L ? nl_ : nr_; }
    int left_length() const { return nl_; }
    int right_length() const { return nr_; }
    int vertex_count() const { return nl_ + nr_ + 1; }

    int id(ChainVertex v) const {
        const int limit = v.chain == Chain::L ? nl_ : nr_;
        if (v.index < 0 || v.index > limit)
            throw IndexError("chain index " + std::to_string(v.index) + " out of range");
        if (v.index == 0) return 0;
        return v.chain == Chain::L ? v.index : nl_ + v.index;
    }

    ChainVertex label(int id) const {
        graph_.check_vertex(id);
        if (id <= nl_) return {Chain::L, id};
        return {Chain::R, id - nl_};
    }

    const OrderedGraph& graph() const { return graph_; }

    /// The same graph relabeled to the terrain's left-to-right order
    /// lambda_nL .. lambda_0, rho_1 .. rho_nR.
    OrderedGraph terrain_order_graph() const {
        std::vector<int> pos(static_cast<std::size_t>(vertex_count()));
        for (int id = 0; id <= nl_; ++id) pos[static_cast<std::size_t>(id)] = nl_ - id;
        for (int j = 1; j <= nr_; ++j) pos[static_cast<std::size_t>(nl_ + j)] = nl_ + j;
        std::vector<std::pair<int, int>> relabeled;
        for (auto [u, v] : graph_.edges())
            relabeled.emplace_back(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
        return OrderedGraph::from_edges(vertex_count(), relabeled);
    }

    /// Terrain vertex index of a funnel vertex; empty for chain-labeled input.
    const std::vector<int>& terrain_indices() const { return terrain_index_; }

private:
    void validate_chain_structure() const {
        auto need = [&](int u, int v) {
            if (!graph_.has_edge(u, v))
                throw FunnelFormatError("missing chain edge between funnel vertices " +
                                        std::to_string(u) + " and " + std::to_string(v));
        };
        for (int j = 0; j + 1 <= nl_; ++j) need(j, j + 1);
        for (int j = 1; j + 1 <= nr_; ++j) need(nl_ + j, nl_ + j + 1);
        if (nr_ >= 1) need(0, nl_ + 1);
        if (!graph_.has_edge(nl_, nl_ + nr_))
            throw NotAFunnel(NotAFunnel::Reason::EndpointsNotVisible);
    }

    int nl_ = 0;
    int nr_ = 0;
    OrderedGraph graph_;
    std::vector<int> terrain_index_;
};

/// Inclusive chain-index range; empty() when hi < lo.
struct Interval {
    int lo = 0;
    int hi = -1;

    bool empty() const { return hi < lo; }
    bool contains(int i) const { return lo <= i && i <= hi; }
    bool operator==(const Interval&) const = default;
};

/// Per-vertex index ranges of the closed neighborhood on each chain.
class NeighborIntervals {
public:
    explicit NeighborIntervals(const Funnel& f) {
        const int n = f.vertex_count();
        on_l_.resize(static_cast<std::size_t>(n));
        on_r_.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> l_idx, r_idx;
            for (int u : f.graph().closed_neighbors(v)) {
                ChainVertex cv = f.label(u);
                if (cv.index == 0) {
                    l_idx.push_back(0);
                    r_idx.push_back(0);
                } else if (cv.chain == Chain::L) {
                    l_idx.push_back(cv.index);
                } else {
                    r_idx.push_back(cv.index);
                }
            }
            on_l_[static_cast<std::size_t>(v)] = to_interval(l_idx, v);
            on_r_[static_cast<std::size_t>(v)] = to_interval(r_idx, v);
        }
    }

    Interval on_chain(int v, Chain c) const {
        return c == Chain::L ? on_l_[static_cast<std::size_t>(v)]
                             : on_r_[static_cast<std::size_t>(v)];
    }

    // interval endpoints; sentinel -1 for an empty "up" end and a large
    // value for an empty "down" end so that the dominating-set case
    // conditions compose without branches
    int ind_lup(int v) const { return on_l_[static_cast<std::size_t>(v)].empty() ? -1 : on_l_[static_cast<std::size_t>(v)].hi; }
    int ind_ldown(int v) const { return on_l_[static_cast<std::size_t>(v)].empty() ? kNoDown : on_l_[static_cast<std::size_t>(v)].lo; }
    int ind_rup(int v) const { return on_r_[static_cast<std::size_t>(v)].empty() ? -1 : on_r_[static_cast<std::size_t>(v)].hi; }
    int ind_rdown(int v) const { return on_r_[static_cast<std::size_t>(v)].empty() ? kNoDown : on_r_[static_cast<std::size_t>(v)].lo; }

    static constexpr int kNoDown = std::numeric_limits<int>::max() / 4;

private:
    Interval to_interval(std::vector<int>& idx, int vertex) const {
        if (idx.empty()) return {};
        std::sort(idx.begin(), idx.end());
        for (std::size_t i = 0; i + 1 < idx.size(); ++i)
            if (idx[i + 1] != idx[i] + 1) throw IntervalViolation(vertex);
        return {idx.front(), idx.back()};
    }

    std::vector<Interval> on_l_;
    std::vector<Interval> on_r_;
};

inline NeighborIntervals neighbor_intervals(const Funnel& f) { return NeighborIntervals(f); }

struct DominatingSetResult {
    std::vector<int> set;              // funnel vertex ids, sorted
    std::int64_t pair_evaluations = 0; // (x, y) candidates tried across all cells
};

namespace detail {

/// Top-down memoized D(l, r): a minimum-size subset of all funnel
/// vertices dominating the base L_l union R_r. Cells hold the actual set
/// so equal-size candidates can be tie-broken lexicographically.
class DominationDP {
public:
    DominationDP(const Funnel& f, const NeighborIntervals& iv)
        : f_(f), iv_(iv), cells_(static_cast<std::size_t>(f.left_length() + 2) *
                                 static_cast<std::size_t>(f.right_length() + 2)) {}

    const std::vector<int>& solve(int l, int r) {
        Cell& cell = at(l, r);
        if (cell.done) return cell.set;
        if (l < 0 && r < 0) { // D(-1,-1) = {}
            cell.done = true;
            return cell.set;
        }

        std::optional<std::vector<int>> best;
        auto offer = [&](std::vector<int> candidate) {
            std::sort(candidate.begin(), candidate.end());
            candidate.erase(std::unique(candidate.begin(), candidate.end()), candidate.end());
            if (!best || candidate.size() < best->size() ||
                (candidate.size() == best->size() && candidate < *best))
                best = std::move(candidate);
        };

        const std::vector<int> no_x{-1};
        const std::vector<int>& xs =
            l >= 0 ? f_.graph().closed_neighbors(f_.id({Chain::L, l})) : no_x;
        const std::vector<int>& ys =
            r >= 0 ? f_.graph().closed_neighbors(f_.id({Chain::R, r})) : no_x;

        for (int x : xs) {
            for (int y : ys) {
                ++pairs_;
                if (x >= 0 && iv_.ind_rup(x) >= r) {
                    // x alone finishes the right chain down to r
                    std::vector<int> cand =
                        solve(iv_.ind_ldown(x) - 1, std::min(r, iv_.ind_rdown(x) - 1));
                    cand.push_back(x);
                    offer(std::move(cand));
                } else if (y >= 0 && iv_.ind_lup(y) >= l) {
                    std::vector<int> cand =
                        solve(std::min(l, iv_.ind_ldown(y) - 1), iv_.ind_rdown(y) - 1);
                    cand.push_back(y);
                    offer(std::move(cand));
                } else {
                    // both fall short; they sit on opposite chains and are
                    // adjacent, so the joint removal leaves a base
                    std::vector<int> cand =
                        solve(std::min(iv_.ind_ldown(x), iv_.ind_ldown(y)) - 1,
                              std::min(iv_.ind_rdown(x), iv_.ind_rdown(y)) - 1);
                    cand.push_back(x);
                    cand.push_back(y);
                    offer(std::move(cand));
                }
            }
        }
        cell.set = std::move(*best);
        cell.done = true;
        return cell.set;
    }

    std::int64_t pairs() const { return pairs_; }

private:
    struct Cell {
        bool done = false;
        std::vector<int> set;
    };

    Cell& at(int l, int r) {
        return cells_[static_cast<std::size_t>(l + 1) *
                          static_cast<std::size_t>(f_.right_length() + 2) +
                      static_cast<std::size_t>(r + 1)];
    }

    const Funnel& f_;
    const NeighborIntervals& iv_;
    std::vector<Cell> cells_;
    std::int64_t pairs_ = 0;
};

} // namespace detail

/// Minimum dominating set of the whole funnel via the D(l, r) recursion;
/// deterministic output (lexicographically smallest among minimum sets
/// reachable by the recursion's tie-breaking).
inline DominatingSetResult min_dominating_set(const Funnel& f) {
    const NeighborIntervals iv(f);
    detail::DominationDP dp(f, iv);
    DominatingSetResult out;
    out.set = dp.solve(f.left_length(), f.right_length());
    out.pair_evaluations = dp.pairs();
    return out;
}

/// Exposes individual DP cells for the table-shape tests.
inline std::vector<int> dominating_set_of_base(const Funnel& f, int l, int r) {
    const NeighborIntervals iv(f);
    detail::DominationDP dp(f, iv);
    return dp.solve(l, r);
}

/// True minimum dominating set by subset enumeration in increasing
/// cardinality; first hit in lexicographic order. Guarded to n <= 20.
inline std::vector<int> brute_force_dominating_set(const OrderedGraph& g) {
    const int n = g.size();
    if (n > 20) throw TooLarge("brute_force_dominating_set is limited to n <= 20");
    if (n == 0) return {};

    std::vector<std::uint32_t> cover(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::uint32_t m = 1u << v;
        for (int w : g.neighbors(v)) m |= 1u << w;
        cover[static_cast<std::size_t>(v)] = m;
    }
    const std::uint32_t full = (1u << n) - 1;

    std::vector<int> pick;
    std::function<bool(int, std::uint32_t, int)> search = [&](int start, std::uint32_t covered,
                                                              int remaining) {
        if (covered == full) return true;
        if (remaining == 0) return false;
        for (int v = start; v < n; ++v) {
            pick.push_back(v);
            if (search(v + 1, covered | cover[static_cast<std::size_t>(v)], remaining - 1))
                return true;
            pick.pop_back();
        }
        return false;
    };
    for (int k = 1; k <= n; ++k) {
        pick.clear();
        if (search(0, 0, k)) return pick;
    }
    return {}; // n == 0 only
}

/// Whether `set` (funnel ids) dominates every funnel vertex.
inline bool dominates(const Funnel& f, const std::vector<int>& set) {
    std::vector<bool> hit(static_cast<std::size_t>(f.vertex_count()), false);
    for (int v : set) {
        f.graph().check_vertex(v);
        hit[static_cast<std::size_t>(v)] = true;
        for (int w : f.graph().neighbors(v)) hit[static_cast<std::size_t>(w)] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

} // namespace terravis
