#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace terravis {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exhaustive searches refuse inputs beyond their guard instead of
/// silently truncating.
struct TooLarge : GraphError {
    using GraphError::GraphError;
};

struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

enum class WitnessKind {
    XViolation,         // p<q<r<s with {p,r},{q,s} in E but {p,s} not
    BarViolation,       // non-consecutive edge without an in-between common neighbor
    NoHamPath,          // missing consecutive edge {i,i+1}
    Antihole,           // vertex set inducing the complement of a cycle
    CycleOrderViolation // induced cycle whose order fits no allowed pattern
};

/// A small vertex tuple certifying a property violation.
struct Witness {
    WitnessKind kind;
    std::vector<int> vertices;

    bool operator==(const Witness&) const = default;
};

inline const char* witness_kind_name(WitnessKind k) {
    switch (k) {
    case WitnessKind::XViolation: return "XViolation";
    case WitnessKind::BarViolation: return "BarViolation";
    case WitnessKind::NoHamPath: return "NoHamPath";
    case WitnessKind::Antihole: return "Antihole";
    case WitnessKind::CycleOrderViolation: return "CycleOrderViolation";
    }
    return "?";
}

/// Graph whose vertex indices 0..n-1 encode a fixed left-to-right order.
/// Adjacency lists are sorted, symmetric, irreflexive and duplicate-free.
/// Immutable after construction.
class OrderedGraph {
public:
    OrderedGraph() = default;

    explicit OrderedGraph(int n) : adj_(static_cast<std::size_t>(n)) {
        if (n < 0) throw GraphError("negative vertex count");
    }

    static OrderedGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        OrderedGraph g(n);
        for (auto [u, v] : edges) {
            g.check_vertex(u);
            g.check_vertex(v);
            if (u == v) throw GraphError("self-loop on vertex " + std::to_string(u));
            g.adj_[static_cast<std::size_t>(u)].push_back(v);
            g.adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& list : g.adj_) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
        return g;
    }

    int size() const { return static_cast<int>(adj_.size()); }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& list = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(list.begin(), list.end(), v);
    }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& list : adj_) twice += list.size();
        return twice / 2;
    }

    /// All edges {i,j} with i<j in lexicographic order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edge_count());
        for (int u = 0; u < size(); ++u)
            for (int v : adj_[static_cast<std::size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    /// Closed neighborhood N[v] = N(v) plus v itself, sorted.
    std::vector<int> closed_neighbors(int v) const {
        const auto& open = neighbors(v);
        std::vector<int> out;
        out.reserve(open.size() + 1);
        auto pos = std::lower_bound(open.begin(), open.end(), v);
        out.insert(out.end(), open.begin(), pos);
        out.push_back(v);
        out.insert(out.end(), pos, open.end());
        return out;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= size())
            throw IndexError("vertex " + std::to_string(v) + " out of range [0, " +
                             std::to_string(size()) + ")");
    }

    bool operator==(const OrderedGraph&) const = default;

private:
    std::vector<std::vector<int>> adj_;
};

} // namespace terravis
