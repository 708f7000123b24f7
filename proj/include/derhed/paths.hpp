#pragma once

// Path algorithms on a shift-graph.
//
// A path X_0, ..., X_n steps either along a nonzero morphism or from X_i to
// X_i[1]. Tracking (orbit, offset) pairs, a morphism step along a hom edge of
// weight w moves (U, a) to (V, a + w) and a shift step moves (U, a) to
// (U, a + 1). So a path from X[a] to Y[b] exists iff some walk X -> Y in the
// weighted digraph has total weight <= b - a: shift steps pad any cheaper walk
// up to the exact weight. Everything reduces to shortest walks with negative
// weights, computed per source by label-correcting relaxation.
//
// Directing objects use the same machinery on the proper graph (non-invertible
// hom edges plus shift edges). X lies on a proper closed walk of weight 0 iff
// either a negative proper closed walk passes through X (pad it with shifts)
// or, in the strongly connected component of X, X lies on a cycle of tight
// edges {(u, v, w) : pi(u) + w = pi(v)} for shortest-walk potentials pi from X.
// Every edge has nonnegative reduced cost w + pi(u) - pi(v) and a closed walk
// has the same weight as its reduced cost, so a weight-0 closed walk uses only
// tight edges, and any tight cycle has weight 0.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <future>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "derhed/error.hpp"
#include "derhed/shift_graph.hpp"

namespace derhed {

/// A shortest-walk value: a finite integer, or -inf / +inf.
class Weight {
public:
    enum class Kind { NegInf, Finite, PosInf };

    static Weight finite(std::int64_t v) { return Weight(Kind::Finite, v); }
    static Weight neg_inf() { return Weight(Kind::NegInf, 0); }
    static Weight pos_inf() { return Weight(Kind::PosInf, 0); }

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }
    std::int64_t value() const noexcept { return value_; }

    /// Whether a walk of total weight <= bound exists.
    bool at_most(std::int64_t bound) const noexcept {
        return kind_ == Kind::NegInf || (kind_ == Kind::Finite && value_ <= bound);
    }

    std::string to_string() const {
        switch (kind_) {
            case Kind::NegInf: return "-inf";
            case Kind::PosInf: return "+inf";
            case Kind::Finite: break;
        }
        return std::to_string(value_);
    }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
        if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
        return a.value_ <=> b.value_;
    }

private:
    Weight(Kind k, std::int64_t v) : kind_(k), value_(v) {}
    Kind kind_;
    std::int64_t value_;
};

enum class StepKind { Start, Hom, Shift };

inline std::string_view to_string(StepKind k) {
    switch (k) {
        case StepKind::Start: return "start";
        case StepKind::Hom: return "hom";
        case StepKind::Shift: return "shift";
    }
    return "?";
}

struct DigraphEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    std::int64_t weight = 0;
    StepKind kind = StepKind::Hom;
};

/// Nodes are orbits; hom edges plus one +1 shift self-edge per node.
class WeightedDigraph {
public:
    WeightedDigraph() = default;
    WeightedDigraph(std::size_t nodes, std::vector<DigraphEdge> edges) : nodes_(nodes), edges_(std::move(edges)) {
        out_.resize(nodes_);
        in_.resize(nodes_);
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            out_[edges_[i].from].push_back(i);
            in_[edges_[i].to].push_back(i);
        }
    }

    /// With `proper`, invertible-only hom edges are dropped and every periodic
    /// orbit gets a -period self-edge standing for X[p] = X.
    static WeightedDigraph of(const ShiftGraph& g, bool proper = false) {
        std::vector<DigraphEdge> edges;
        for (const auto& [pair, list] : g.homs()) {
            for (const HomEdge& e : list) {
                if (proper && e.all_iso) continue;
                edges.push_back({pair.first, pair.second, e.weight, StepKind::Hom});
            }
        }
        for (std::size_t x = 0; x < g.size(); ++x) {
            edges.push_back({x, x, 1, StepKind::Shift});
            if (proper && g.orbit(x).period) edges.push_back({x, x, -*g.orbit(x).period, StepKind::Shift});
        }
        return WeightedDigraph(g.size(), std::move(edges));
    }

    std::size_t size() const noexcept { return nodes_; }
    const std::vector<DigraphEdge>& edges() const noexcept { return edges_; }
    const std::vector<std::size_t>& out(std::size_t v) const { return out_[v]; }
    const std::vector<std::size_t>& in(std::size_t v) const { return in_[v]; }

    std::vector<bool> reachable_from(std::size_t source) const { return sweep({source}, true); }
    std::vector<bool> reaching(std::size_t target) const { return sweep({target}, false); }

    std::vector<bool> sweep(const std::vector<std::size_t>& seeds, bool forward) const {
        std::vector<bool> seen(nodes_, false);
        std::vector<std::size_t> stack;
        for (std::size_t s : seeds) {
            if (!seen[s]) {
                seen[s] = true;
                stack.push_back(s);
            }
        }
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t ei : forward ? out_[v] : in_[v]) {
                const std::size_t w = forward ? edges_[ei].to : edges_[ei].from;
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        return seen;
    }

private:
    std::size_t nodes_ = 0;
    std::vector<DigraphEdge> edges_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
};

/// Shortest walks from one source: |nodes| relaxation rounds, one detection
/// round, then -inf spreads forward from every node relaxed in detection.
/// `allowed` restricts the walk to a node subset.
inline std::vector<Weight> shortest_walks(const WeightedDigraph& d, std::size_t source,
                                          const std::vector<bool>* allowed = nullptr) {
    const std::size_t n = d.size();
    std::vector<std::optional<std::int64_t>> dist(n);
    dist[source] = 0;
    auto usable = [&](const DigraphEdge& e) {
        return allowed == nullptr || ((*allowed)[e.from] && (*allowed)[e.to]);
    };
    for (std::size_t round = 0; round < n; ++round) {
        bool changed = false;
        for (const DigraphEdge& e : d.edges()) {
            if (!usable(e) || !dist[e.from]) continue;
            const std::int64_t candidate = *dist[e.from] + e.weight;
            if (!dist[e.to] || candidate < *dist[e.to]) {
                dist[e.to] = candidate;
                changed = true;
            }
        }
        if (!changed) break;
    }
    std::vector<std::size_t> seeds;
    for (const DigraphEdge& e : d.edges()) {
        if (!usable(e) || !dist[e.from]) continue;
        if (*dist[e.from] + e.weight < *dist[e.to]) seeds.push_back(e.to);
    }
    std::vector<bool> negative(n, false);
    if (!seeds.empty()) {
        // Forward reachability, restricted like the walks themselves.
        std::vector<std::size_t> stack;
        for (std::size_t s : seeds) {
            if (!negative[s]) {
                negative[s] = true;
                stack.push_back(s);
            }
        }
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t ei : d.out(v)) {
                const DigraphEdge& e = d.edges()[ei];
                if (!usable(e) || negative[e.to]) continue;
                negative[e.to] = true;
                stack.push_back(e.to);
            }
        }
    }
    std::vector<Weight> out;
    out.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (negative[v]) {
            out.push_back(Weight::neg_inf());
        } else if (dist[v]) {
            out.push_back(Weight::finite(*dist[v]));
        } else {
            out.push_back(Weight::pos_inf());
        }
    }
    return out;
}

/// Connected components of the undirected graph on hom edges, each sorted by
/// orbit index, ordered by their first member.
inline std::vector<std::vector<std::size_t>> blocks(const ShiftGraph& g) {
    std::vector<std::size_t> parent(g.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [pair, list] : g.homs()) {
        if (list.empty()) continue;
        const std::size_t a = find(pair.first);
        const std::size_t b = find(pair.second);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::optional<std::size_t>> slot(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) {
        const std::size_t root = find(x);
        if (!slot[root]) {
            slot[root] = parts.size();
            parts.emplace_back();
        }
        parts[*slot[root]].push_back(x);
    }
    return parts;
}

struct Degeneracy {
    enum class Kind { NonDegenerate, DegenerateAperiodic, DegeneratePeriodic };
    Kind kind = Kind::NonDegenerate;
    std::optional<int> period;
    std::size_t end_dim = 0;

    friend bool operator==(const Degeneracy&, const Degeneracy&) = default;
};

inline std::string_view to_string(Degeneracy::Kind k) {
    switch (k) {
        case Degeneracy::Kind::NonDegenerate: return "NonDegenerate";
        case Degeneracy::Kind::DegenerateAperiodic: return "DegenerateAperiodic";
        case Degeneracy::Kind::DegeneratePeriodic: return "DegeneratePeriodic";
    }
    return "?";
}

/// A block is degenerate when it is a single orbit all of whose nonzero
/// morphisms are invertible: D^b(D-mod) when aperiodic, (D^n-mod, (sigma^n)^*)
/// when X = X[n].
inline Degeneracy classify_degenerate(const ShiftGraph& g, const std::vector<std::size_t>& block) {
    if (block.size() != 1) return {};
    const std::size_t x = block.front();
    for (const auto& [pair, list] : g.homs()) {
        if (pair.first != x && pair.second != x) continue;
        for (const HomEdge& e : list) {
            if (!e.all_iso) return {};
        }
    }
    const Orbit& o = g.orbit(x);
    if (o.period) return {Degeneracy::Kind::DegeneratePeriodic, o.period, o.end_dim};
    return {Degeneracy::Kind::DegenerateAperiodic, std::nullopt, o.end_dim};
}

struct WalkStep {
    ObjRef at;
    StepKind kind = StepKind::Start;

    friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

struct PathReport {
    bool exists = false;
    Weight min_weight = Weight::pos_inf();
    std::vector<WalkStep> witness; // raw walk positions, offsets not reduced
};

/// All-pairs shortest-walk table for one shift-graph plus the queries built on
/// it. The graph must outlive this object.
class PathCalculus {
public:
    explicit PathCalculus(const ShiftGraph& g, unsigned jobs = 1)
        : g_(&g), digraph_(WeightedDigraph::of(g)), blocks_(derhed::blocks(g)) {
        const std::size_t n = g.size();
        block_of_.assign(n, 0);
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            for (std::size_t x : blocks_[b]) block_of_[x] = b;
        }
        table_.resize(n);
        if (jobs <= 1 || n < 2) {
            for (std::size_t x = 0; x < n; ++x) table_[x] = shortest_walks(digraph_, x);
        } else {
            std::vector<std::future<std::vector<Weight>>> pending;
            for (std::size_t start = 0; start < n; start += jobs) {
                pending.clear();
                for (std::size_t x = start; x < std::min(n, start + jobs); ++x) {
                    pending.push_back(std::async(std::launch::async, [this, x] { return shortest_walks(digraph_, x); }));
                }
                for (std::size_t i = 0; i < pending.size(); ++i) table_[start + i] = pending[i].get();
            }
        }
        // A periodic orbit's +-p iso edges already form a negative cycle; the
        // whole block is short-circuited to -inf for every reachable pair.
        for (const auto& block : blocks_) {
            const bool periodic = std::any_of(block.begin(), block.end(),
                                              [&](std::size_t x) { return g.orbit(x).period.has_value(); });
            if (!periodic) continue;
            for (std::size_t x : block) {
                for (std::size_t y : block) {
                    if (!table_[x][y].is_pos_inf()) table_[x][y] = Weight::neg_inf();
                }
            }
        }
    }

    const ShiftGraph& graph() const noexcept { return *g_; }
    const WeightedDigraph& digraph() const noexcept { return digraph_; }
    const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
    std::size_t block_of(std::size_t x) const { return block_of_.at(x); }

    Weight min_weight(std::size_t x, std::size_t y) const { return table_.at(x).at(y); }
    Weight min_weight(std::string_view x, std::string_view y) const {
        return min_weight(g_->orbit_index(x), g_->orbit_index(y));
    }

    std::vector<std::size_t> negative_walk_objects() const {
        std::vector<std::size_t> out;
        for (std::size_t x = 0; x < g_->size(); ++x) {
            if (table_[x][x].is_neg_inf()) out.push_back(x);
        }
        return out;
    }

    PathReport path_exists(ObjRef from, ObjRef to) const {
        if (from.orbit >= g_->size() || to.orbit >= g_->size()) throw Error(ErrorKind::UnknownOrbit, "unknown orbit");
        PathReport report;
        report.min_weight = min_weight(from.orbit, to.orbit);
        const std::int64_t target = to.offset - from.offset;
        report.exists = report.min_weight.at_most(target);
        if (!report.exists) return report;

        std::vector<HomStep> hops;
        if (report.min_weight.is_finite()) {
            hops = fewest_hop_optimal_walk(from.orbit, to.orbit, report.min_weight.value());
        } else {
            auto walk = negative_walk(from.orbit, to.orbit, target);
            if (!walk) return report; // -inf from the periodic short-circuit only
            hops = std::move(*walk);
        }
        report.witness.push_back({from, StepKind::Start});
        ObjRef at = from;
        for (const HomStep& h : hops) {
            at = {h.to, at.offset + h.weight};
            report.witness.push_back({at, StepKind::Hom});
        }
        while (at.offset < to.offset) {
            at.offset += 1;
            report.witness.push_back({at, StepKind::Shift});
        }
        return report;
    }

    /// Orbits X with no proper closed walk of length >= 1 and weight 0.
    std::vector<std::size_t> directing_objects() const {
        const WeightedDigraph proper = WeightedDigraph::of(*g_, true);
        std::vector<std::size_t> out;
        for (std::size_t x = 0; x < g_->size(); ++x) {
            const auto dist = shortest_walks(proper, x);
            if (dist[x].is_neg_inf()) continue;
            const auto forward = proper.reachable_from(x);
            const auto backward = proper.reaching(x);
            std::vector<bool> component(g_->size());
            for (std::size_t v = 0; v < g_->size(); ++v) component[v] = forward[v] && backward[v];
            const auto potential = shortest_walks(proper, x, &component);
            // Is x on a cycle of tight edges inside its component?
            std::vector<bool> seen(g_->size(), false);
            std::vector<std::size_t> stack{x};
            bool cycle = false;
            while (!stack.empty() && !cycle) {
                const std::size_t v = stack.back();
                stack.pop_back();
                for (std::size_t ei : proper.out(v)) {
                    const DigraphEdge& e = proper.edges()[ei];
                    if (!component[e.to] || !component[e.from]) continue;
                    if (potential[e.from].value() + e.weight != potential[e.to].value()) continue;
                    if (e.to == x) {
                        cycle = true;
                        break;
                    }
                    if (!seen[e.to]) {
                        seen[e.to] = true;
                        stack.push_back(e.to);
                    }
                }
            }
            if (!cycle) out.push_back(x);
        }
        return out;
    }

private:
    struct HomStep {
        std::size_t to;
        std::int64_t weight;
    };

    static constexpr std::int64_t unreachable = std::numeric_limits<std::int64_t>::max();

    std::vector<const DigraphEdge*> hom_out(std::size_t v) const {
        std::vector<const DigraphEdge*> out;
        for (std::size_t ei : digraph_.out(v)) {
            const DigraphEdge& e = digraph_.edges()[ei];
            if (e.kind == StepKind::Hom) out.push_back(&e);
        }
        // Lexicographic orbit id first, then weight.
        std::sort(out.begin(), out.end(), [&](const DigraphEdge* a, const DigraphEdge* b) {
            const auto& ia = g_->orbit(a->to).id;
            const auto& ib = g_->orbit(b->to).id;
            if (ia != ib) return ia < ib;
            return a->weight < b->weight;
        });
        return out;
    }

    // remaining[j][v] = min weight of a walk v -> target with exactly j hom steps.
    std::vector<std::vector<std::int64_t>> backward_table(std::size_t target, std::size_t steps) const {
        const std::size_t n = g_->size();
        std::vector<std::vector<std::int64_t>> remaining(steps + 1, std::vector<std::int64_t>(n, unreachable));
        remaining[0][target] = 0;
        for (std::size_t j = 1; j <= steps; ++j) {
            for (const DigraphEdge& e : digraph_.edges()) {
                if (e.kind != StepKind::Hom || remaining[j - 1][e.to] == unreachable) continue;
                remaining[j][e.from] = std::min(remaining[j][e.from], e.weight + remaining[j - 1][e.to]);
            }
        }
        return remaining;
    }

    // The lexicographically least walk source -> target with exactly `steps`
    // hom steps and weight `total`; the caller guarantees one exists.
    std::vector<HomStep> greedy_walk(std::size_t source, std::size_t target, std::size_t steps,
                                     std::int64_t total) const {
        const auto remaining = backward_table(target, steps);
        std::vector<HomStep> walk;
        std::size_t at = source;
        std::int64_t spent = 0;
        for (std::size_t j = steps; j > 0; --j) {
            bool moved = false;
            for (const DigraphEdge* e : hom_out(at)) {
                const std::int64_t rest = remaining[j - 1][e->to];
                if (rest == unreachable || spent + e->weight + rest != total) continue;
                walk.push_back({e->to, e->weight});
                spent += e->weight;
                at = e->to;
                moved = true;
                break;
            }
            if (!moved) throw Error(ErrorKind::InvalidGraph, "internal: walk reconstruction failed");
        }
        return walk;
    }

    // Min-weight walk with the fewest hom steps (<= |nodes| - 1 when finite).
    std::vector<HomStep> fewest_hop_optimal_walk(std::size_t source, std::size_t target, std::int64_t best) const {
        const std::size_t n = g_->size();
        std::vector<std::int64_t> layer(n, unreachable);
        layer[source] = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            if (layer[target] == best) return greedy_walk(source, target, k, best);
            std::vector<std::int64_t> next(n, unreachable);
            for (const DigraphEdge& e : digraph_.edges()) {
                if (e.kind != StepKind::Hom || layer[e.from] == unreachable) continue;
                next[e.to] = std::min(next[e.to], layer[e.from] + e.weight);
            }
            layer = std::move(next);
        }
        throw Error(ErrorKind::InvalidGraph, "internal: no optimal walk found");
    }

    // Fewest hom steps from source to target, lexicographic among those.
    std::optional<std::vector<HomStep>> any_walk(std::size_t source, std::size_t target) const {
        const std::size_t n = g_->size();
        std::vector<std::size_t> hops(n, std::numeric_limits<std::size_t>::max());
        hops[target] = 0;
        std::queue<std::size_t> queue;
        queue.push(target);
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop();
            for (std::size_t ei : digraph_.in(v)) {
                const DigraphEdge& e = digraph_.edges()[ei];
                if (e.kind != StepKind::Hom || hops[e.from] != std::numeric_limits<std::size_t>::max()) continue;
                hops[e.from] = hops[v] + 1;
                queue.push(e.from);
            }
        }
        if (hops[source] == std::numeric_limits<std::size_t>::max()) return std::nullopt;
        std::vector<HomStep> walk;
        for (std::size_t at = source; at != target;) {
            for (const DigraphEdge* e : hom_out(at)) {
                if (hops[e->to] + 1 == hops[at]) {
                    walk.push_back({e->to, e->weight});
                    at = e->to;
                    break;
                }
            }
        }
        return walk;
    }

    static std::int64_t total(const std::vector<HomStep>& walk) {
        std::int64_t s = 0;
        for (const auto& h : walk) s += h.weight;
        return s;
    }

    // Walk of weight <= target via a negative closed walk at some node c with
    // source -> c -> target; c is the least orbit id that works.
    std::optional<std::vector<HomStep>> negative_walk(std::size_t source, std::size_t target, std::int64_t bound) const {
        const std::size_t n = g_->size();
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return g_->orbit(a).id < g_->orbit(b).id; });
        for (std::size_t c : order) {
            auto to_c = any_walk(source, c);
            if (!to_c) continue;
            auto from_c = any_walk(c, target);
            if (!from_c) continue;
            // Shortest negative closed walk at c, at most n hom steps.
            std::vector<std::int64_t> layer(n, unreachable);
            layer[c] = 0;
            std::optional<std::vector<HomStep>> loop;
            for (std::size_t k = 1; k <= n && !loop; ++k) {
                std::vector<std::int64_t> next(n, unreachable);
                for (const DigraphEdge& e : digraph_.edges()) {
                    if (e.kind != StepKind::Hom || layer[e.from] == unreachable) continue;
                    next[e.to] = std::min(next[e.to], layer[e.from] + e.weight);
                }
                layer = std::move(next);
                if (layer[c] != unreachable && layer[c] < 0) loop = greedy_walk(c, c, k, layer[c]);
            }
            if (!loop) continue;
            const std::int64_t per_loop = total(*loop);
            const std::int64_t base = total(*to_c) + total(*from_c);
            std::int64_t repeats = 0;
            if (base > bound) repeats = (base - bound + (-per_loop) - 1) / (-per_loop);
            std::vector<HomStep> walk = std::move(*to_c);
            for (std::int64_t r = 0; r < repeats; ++r) walk.insert(walk.end(), loop->begin(), loop->end());
            walk.insert(walk.end(), from_c->begin(), from_c->end());
            return walk;
        }
        return std::nullopt;
    }

    const ShiftGraph* g_;
    WeightedDigraph digraph_;
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<std::size_t> block_of_;
    std::vector<std::vector<Weight>> table_;
};

inline Weight min_weight(const ShiftGraph& g, std::string_view x, std::string_view y) {
    return PathCalculus(g).min_weight(x, y);
}

inline PathReport path_exists(const ShiftGraph& g, ObjRef from, ObjRef to) {
    return PathCalculus(g).path_exists(from, to);
}

inline std::vector<std::size_t> negative_walk_objects(const ShiftGraph& g) {
    return PathCalculus(g).negative_walk_objects();
}

inline std::vector<std::size_t> directing_objects(const ShiftGraph& g) { return PathCalculus(g).directing_objects(); }

} // namespace derhed
