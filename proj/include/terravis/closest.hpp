#pragma once

#include "terravis/ordered_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace terravis {

// Sentinels for empty closest sets: rclosest uses n (one past the
// rightmost vertex, acts as +inf in vertex comparisons), lclosest uses -1.
inline int rclosest_none(const OrderedGraph& g) { return g.size(); }
inline constexpr int lclosest_none = -1;

/// Leftmost vertex of the closed neighborhood; v itself when isolated.
inline int lhorizon(const OrderedGraph& g, int v) {
    const auto& nb = g.neighbors(v);
    return nb.empty() ? v : std::min(v, nb.front());
}

/// Rightmost vertex of the closed neighborhood; v itself when isolated.
inline int rhorizon(const OrderedGraph& g, int v) {
    const auto& nb = g.neighbors(v);
    return nb.empty() ? v : std::max(v, nb.back());
}

/// min{x in N[v] | x >= a} by binary search; n when empty.
inline int rclosest_query(const OrderedGraph& g, int a, int v) {
    if (v >= a) {
        const auto& nb = g.neighbors(v);
        auto it = std::lower_bound(nb.begin(), nb.end(), a);
        return it == nb.end() ? v : std::min(v, *it);
    }
    const auto& nb = g.neighbors(v);
    auto it = std::lower_bound(nb.begin(), nb.end(), a);
    return it == nb.end() ? rclosest_none(g) : *it;
}

/// max{x in N[v] | x <= a} by binary search; -1 when empty.
inline int lclosest_query(const OrderedGraph& g, int a, int v) {
    const auto& nb = g.neighbors(v);
    auto it = std::upper_bound(nb.begin(), nb.end(), a);
    if (v <= a) return it == nb.begin() ? v : std::max(v, *std::prev(it));
    return it == nb.begin() ? lclosest_none : *std::prev(it);
}

/// Dense lclosest/rclosest over all (a, v), built in O(n^2) by a linear
/// merge per vertex.
class ClosestTable {
public:
    explicit ClosestTable(const OrderedGraph& g) : n_(g.size()) {
        rtab_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
        ltab_.resize(rtab_.size());
        for (int v = 0; v < n_; ++v) {
            const std::vector<int> closed = g.closed_neighbors(v);
            auto* rrow = &rtab_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n_)];
            auto* lrow = &ltab_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n_)];
            std::size_t ri = 0; // first member >= a
            int last_le = lclosest_none;
            std::size_t li = 0; // next member to fold into last_le
            for (int a = 0; a < n_; ++a) {
                while (ri < closed.size() && closed[ri] < a) ++ri;
                rrow[a] = ri < closed.size() ? closed[ri] : n_;
                while (li < closed.size() && closed[li] <= a) last_le = closed[li++];
                lrow[a] = last_le;
            }
        }
    }

    int rclosest(int a, int v) const {
        return rtab_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n_) +
                     static_cast<std::size_t>(a)];
    }

    int lclosest(int a, int v) const {
        return ltab_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n_) +
                     static_cast<std::size_t>(a)];
    }

private:
    int n_;
    std::vector<int> rtab_;
    std::vector<int> ltab_;
};

enum class ClosestMode { BinarySearch, Precomputed };

/// Uniform access to the closest-neighbor values in either the
/// per-query binary-search flavor or the O(n^2)-precomputed one.
/// Counts every query for the instrumentation reports.
class ClosestProvider {
public:
    ClosestProvider(const OrderedGraph& g, ClosestMode mode) : graph_(&g), mode_(mode) {
        if (mode_ == ClosestMode::Precomputed) table_.emplace(g);
    }

    int rclosest(int a, int v) const {
        ++queries_;
        return mode_ == ClosestMode::Precomputed ? table_->rclosest(a, v)
                                                 : rclosest_query(*graph_, a, v);
    }

    int lclosest(int a, int v) const {
        ++queries_;
        return mode_ == ClosestMode::Precomputed ? table_->lclosest(a, v)
                                                 : lclosest_query(*graph_, a, v);
    }

    ClosestMode mode() const { return mode_; }
    std::int64_t queries() const { return queries_; }
    void reset_queries() { queries_ = 0; }

private:
    const OrderedGraph* graph_;
    ClosestMode mode_;
    std::optional<ClosestTable> table_;
    mutable std::int64_t queries_ = 0;
};

} // namespace terravis
