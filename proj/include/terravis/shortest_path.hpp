#pragma once

#include "terravis/closest.hpp"
#include "terravis/ordered_graph.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace terravis {

struct SearchCounters {
    std::int64_t iterations = 0;   // main loop passes
    std::int64_t queue_pushes = 0; // candidate-queue insertions
    std::int64_t queue_pops = 0;   // test-(ii) head removals
    std::int64_t closest_queries = 0;
};

struct DistanceRun {
    std::optional<int> distance;
    SearchCounters counters;
};

namespace detail {

constexpr int kInfDist = std::numeric_limits<int>::max() / 4;

/// One shortest-path query: grows the frontier window from s and t
/// simultaneously and checks the three meeting conditions each round.
class FrontierSearch {
public:
    FrontierSearch(const OrderedGraph& g, int s, int t, ClosestProvider& closest, bool record)
        : g_(g), s_(s), t_(t), closest_(closest), record_(record) {}

    struct Best {
        enum class Kind { None, SharedBeta, QueueS, QueueT, Horizons } kind = Kind::None;
        int a = -1; // SharedBeta: meeting vertex; QueueS/T: queue head; Horizons: s-side witness
        int b = -1; // QueueS: alpha_t at firing; QueueT: alpha_s; Horizons: t-side witness
    };

    void run() {
        alpha_s_ = beta_s_ = s_;
        alpha_t_ = beta_t_ = t_;
        ds_.emplace(s_, 0);
        dt_.emplace(t_, 0);
        queue_s_.assign(1, s_);
        queue_t_.assign(1, t_);

        for (int k = 0; k <= d_; ++k) {
            ++counters_.iterations;
            assert(alpha_s_ <= s_ && s_ <= beta_s_ && beta_s_ <= t_);
            assert(s_ <= beta_t_ && beta_t_ <= t_ && t_ <= alpha_t_);

            update_distances(k);

            if (beta_s_ >= beta_t_) { // test (i)
                consider_shared(beta_s_);
                consider_shared(beta_t_);
            }
            while (alpha_t_ >= head_key_s()) { // test (ii), sigma <= tau
                improve(dist_s(queue_s_.front()) + dist_t(alpha_t_) + 1,
                        Best{Best::Kind::QueueS, queue_s_.front(), alpha_t_});
                queue_s_.pop_front();
                ++counters_.queue_pops;
            }
            while (alpha_s_ <= head_key_t()) { // test (ii), sigma >= tau
                improve(dist_t(queue_t_.front()) + dist_s(alpha_s_) + 1,
                        Best{Best::Kind::QueueT, queue_t_.front(), alpha_s_});
                queue_t_.pop_front();
                ++counters_.queue_pops;
            }
            if (qs_ < kInfDist && qt_ < kInfDist) // test (iii)
                improve(qs_ + qt_ + 3, Best{Best::Kind::Horizons, qs_witness_, qt_witness_});

            bool moved = extend_search_range();
            if (!moved && d_ >= kInfDist) return; // frontier fixed point, d still infinite
        }
    }

    std::optional<int> distance() const {
        if (d_ >= kInfDist) return std::nullopt;
        return d_;
    }

    SearchCounters counters() const {
        SearchCounters c = counters_;
        c.closest_queries = closest_.queries();
        return c;
    }

    const Best& best() const { return best_; }

    /// Path v -> ... -> root (s or t) along recorded predecessors.
    std::vector<int> chain(int v, bool s_side) const {
        const auto& pred = s_side ? pred_s_ : pred_t_;
        std::vector<int> out{v};
        auto it = pred.find(v);
        while (it != pred.end()) {
            out.push_back(it->second);
            it = pred.find(it->second);
        }
        return out;
    }

    int dist_s(int v) const {
        auto it = ds_.find(v);
        return it == ds_.end() ? kInfDist : it->second;
    }

    int dist_t(int v) const {
        auto it = dt_.find(v);
        return it == dt_.end() ? kInfDist : it->second;
    }

private:
    // rclosest_t of the Q_s head; +inf (= n) for an empty queue so the
    // while condition fails. Mirrored for Q_t with -inf (= -1).
    int head_key_s() const {
        return queue_s_.empty() ? g_.size() : closest_.rclosest(t_, queue_s_.front());
    }

    int head_key_t() const {
        return queue_t_.empty() ? lclosest_none : closest_.lclosest(s_, queue_t_.front());
    }

    void improve(int candidate, Best why) {
        if (candidate < d_) {
            d_ = candidate;
            best_ = why;
        }
    }

    void consider_shared(int v) {
        improve(dist_s(v) + dist_t(v), Best{Best::Kind::SharedBeta, v, -1});
    }

    void update_distances(int k) {
        // first write wins: k only grows, so this is min(k, old)
        ds_.emplace(alpha_s_, k);
        dt_.emplace(alpha_t_, k);
        ds_.emplace(beta_s_, k);
        dt_.emplace(beta_t_, k);

        if (qs_ >= kInfDist && std::max(rhorizon(g_, alpha_s_), rhorizon(g_, beta_s_)) >= t_) {
            qs_ = k;
            qs_witness_ = rhorizon(g_, alpha_s_) >= t_ ? alpha_s_ : beta_s_;
        }
        if (qt_ >= kInfDist && std::min(lhorizon(g_, alpha_t_), lhorizon(g_, beta_t_)) <= s_) {
            qt_ = k;
            qt_witness_ = lhorizon(g_, alpha_t_) <= s_ ? alpha_t_ : beta_t_;
        }
        if (closest_.rclosest(t_, alpha_s_) < head_key_s()) {
            queue_s_.push_front(alpha_s_);
            ++counters_.queue_pushes;
        }
        if (closest_.lclosest(s_, alpha_t_) > head_key_t()) {
            queue_t_.push_front(alpha_t_);
            ++counters_.queue_pushes;
        }
    }

    bool extend_search_range() {
        const int old_as = alpha_s_, old_bs = beta_s_, old_at = alpha_t_, old_bt = beta_t_;

        const int lh_a = lhorizon(g_, alpha_s_), lh_b = lhorizon(g_, beta_s_);
        const int as_from = lh_a <= lh_b ? alpha_s_ : beta_s_;
        const int lc_a = closest_.lclosest(t_, alpha_s_), lc_b = closest_.lclosest(t_, beta_s_);
        const int bs_from = lc_a >= lc_b ? alpha_s_ : beta_s_;
        if (record_) {
            note_pred_s(std::min(lh_a, lh_b), as_from);
            note_pred_s(std::max(lc_a, lc_b), bs_from);
        }
        alpha_s_ = std::min(lh_a, lh_b);
        beta_s_ = std::max(lc_a, lc_b);

        const int rh_a = rhorizon(g_, alpha_t_), rh_b = rhorizon(g_, beta_t_);
        const int at_from = rh_a >= rh_b ? alpha_t_ : beta_t_;
        const int rc_a = closest_.rclosest(s_, alpha_t_), rc_b = closest_.rclosest(s_, beta_t_);
        const int bt_from = rc_a <= rc_b ? alpha_t_ : beta_t_;
        if (record_) {
            note_pred_t(std::max(rh_a, rh_b), at_from);
            note_pred_t(std::min(rc_a, rc_b), bt_from);
        }
        alpha_t_ = std::max(rh_a, rh_b);
        beta_t_ = std::min(rc_a, rc_b);

        assert(alpha_s_ <= old_as && beta_s_ >= old_bs); // frontier only moves outward
        assert(alpha_t_ >= old_at && beta_t_ <= old_bt);
        return alpha_s_ != old_as || beta_s_ != old_bs || alpha_t_ != old_at || beta_t_ != old_bt;
    }

    void note_pred_s(int v, int from) {
        if (v != from && !ds_.count(v) && !pred_s_.count(v)) pred_s_.emplace(v, from);
    }

    void note_pred_t(int v, int from) {
        if (v != from && !dt_.count(v) && !pred_t_.count(v)) pred_t_.emplace(v, from);
    }

    const OrderedGraph& g_;
    int s_;
    int t_;
    ClosestProvider& closest_;
    bool record_;

    int alpha_s_ = 0, beta_s_ = 0, alpha_t_ = 0, beta_t_ = 0;
    std::unordered_map<int, int> ds_, dt_;       // sparse distance maps
    std::unordered_map<int, int> pred_s_, pred_t_;
    // Q_s ascending by rclosest_t, Q_t descending by lclosest_s; pushes
    // happen only at a strictly better front, so sortedness is free
    std::deque<int> queue_s_, queue_t_;
    int d_ = kInfDist;
    int qs_ = kInfDist, qt_ = kInfDist;
    int qs_witness_ = -1, qt_witness_ = -1;
    SearchCounters counters_;
    Best best_;
};

} // namespace detail

/// Output-sensitive unweighted shortest distance on a terrain-like graph
/// (a vertex order satisfying the X-property). Runs at most d*+1 frontier
/// rounds; nullopt when s and t are disconnected.
inline DistanceRun shortest_distance(const OrderedGraph& g, int s, int t,
                                     ClosestProvider& closest) {
    g.check_vertex(s);
    g.check_vertex(t);
    closest.reset_queries();
    if (s == t) return {0, {}};
    if (s > t) std::swap(s, t);
    detail::FrontierSearch search(g, s, t, closest, /*record=*/false);
    search.run();
    return {search.distance(), search.counters()};
}

inline DistanceRun shortest_distance(const OrderedGraph& g, int s, int t,
                                     ClosestMode mode = ClosestMode::BinarySearch) {
    ClosestProvider provider(g, mode);
    return shortest_distance(g, s, t, provider);
}

/// An actual shortest s-t path of length shortest_distance, or nullopt
/// when disconnected. Splices the recorded frontier chains; the junction
/// for the queue- and horizon-based conditions is located by a bounded
/// search over the recorded chain, which is guaranteed to contain an
/// exact-length splice point at an optimal firing.
inline std::optional<std::vector<int>> shortest_path(const OrderedGraph& g, int s, int t,
                                                     ClosestProvider& closest) {
    g.check_vertex(s);
    g.check_vertex(t);
    if (s == t) return std::vector<int>{s};
    const bool swapped = s > t;
    if (swapped) std::swap(s, t);

    detail::FrontierSearch search(g, s, t, closest, /*record=*/true);
    search.run();
    const auto d = search.distance();
    if (!d) return std::nullopt;

    using Best = detail::FrontierSearch::Best;
    const Best& best = search.best();
    std::optional<std::vector<int>> path;

    auto prefix_from_s = [&](int v) { // s -> ... -> v
        auto c = search.chain(v, true);
        std::reverse(c.begin(), c.end());
        return c;
    };
    auto accept = [&](std::vector<int> candidate) {
        if (path || static_cast<int>(candidate.size()) - 1 != *d) return;
        path = std::move(candidate);
    };

    switch (best.kind) {
    case Best::Kind::SharedBeta: {
        std::vector<int> out = prefix_from_s(best.a);
        auto tail = search.chain(best.a, false);
        out.insert(out.end(), tail.begin() + 1, tail.end());
        accept(std::move(out));
        break;
    }
    case Best::Kind::QueueS: {
        // u left of s, fired against w = alpha_t: enter w's chain at some
        // vertex c with {u,c} in E (or c = u) and follow it down to t
        const int u = best.a;
        const std::vector<int> prefix = prefix_from_s(u);       // s .. u
        const std::vector<int> chain = search.chain(best.b, false); // w .. t
        for (std::size_t i = 0; i < chain.size() && !path; ++i) {
            const int c = chain[i];
            if (c != u && !g.has_edge(u, c)) continue;
            std::vector<int> out = prefix;
            out.insert(out.end(), chain.begin() + static_cast<long>(i + (c == u ? 1 : 0)),
                       chain.end());
            accept(std::move(out));
        }
        break;
    }
    case Best::Kind::QueueT: {
        // mirror: u right of t, fired against w = alpha_s: leave the
        // s-side chain of w at some c with {c,u} in E and jump to u
        const int u = best.a;
        const std::vector<int> walk = prefix_from_s(best.b); // s .. w
        const std::vector<int> suffix = search.chain(u, false); // u .. t
        for (std::size_t i = 0; i < walk.size() && !path; ++i) {
            const std::size_t pos = walk.size() - 1 - i; // scan from the w end
            const int c = walk[pos];
            if (c != u && !g.has_edge(c, u)) continue;
            std::vector<int> out(walk.begin(), walk.begin() + static_cast<long>(pos + 1));
            out.insert(out.end(), suffix.begin() + (c == u ? 1 : 0), suffix.end());
            accept(std::move(out));
        }
        break;
    }
    case Best::Kind::Horizons: {
        // v with rhorizon(v) >= t and w with lhorizon(w) <= s; at an
        // optimal firing the horizon edges cross and the X-property links
        // the two horizons, giving the 3-edge junction below
        const int v = best.a, w = best.b;
        const int hv = rhorizon(g, v), hw = lhorizon(g, w);
        const std::vector<int> prefix = prefix_from_s(v);    // s .. v
        const std::vector<int> suffix = search.chain(w, false); // w .. t
        auto try_junction = [&](std::initializer_list<int> mid) {
            if (path) return;
            std::vector<int> out = prefix;
            for (int x : mid) {
                if (!g.has_edge(out.back(), x)) return;
                out.push_back(x);
            }
            if (!g.has_edge(out.back(), suffix.front())) return;
            out.insert(out.end(), suffix.begin(), suffix.end());
            accept(std::move(out));
        };
        try_junction({hv, hw});
        try_junction({});
        try_junction({hv});
        try_junction({hw});
        break;
    }
    case Best::Kind::None:
        break;
    }

    if (!path) throw GraphError("internal: shortest-path reconstruction failed");
    assert(std::unordered_set<int>(path->begin(), path->end()).size() == path->size());
    if (swapped) std::reverse(path->begin(), path->end());
    return path;
}

inline std::optional<std::vector<int>> shortest_path(const OrderedGraph& g, int s, int t,
                                                     ClosestMode mode = ClosestMode::BinarySearch) {
    ClosestProvider provider(g, mode);
    return shortest_path(g, s, t, provider);
}

} // namespace terravis
