#pragma once

// Hereditary test for a block, heart extraction and verification, and the
// cohomology / truncation functors of a hereditary heart.
//
// A block is hereditary iff no indecomposable X admits a path from X[1] to X,
// i.e. iff no orbit lies on a negative closed walk. In that case the heart is
// read off the reachable class U = [X ->] of a fixed source X: (Y, n) is in U
// iff n >= d_Y with d_Y = min_weight(X, Y), so U meets the complement of U[1]
// exactly in the objects Y[d_Y]. Shortest-walk distances satisfy
// d_Z <= d_Y + w for every edge (Y, Z, w), which is Hom(A, A[m]) = 0 for m < 0.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "derhed/error.hpp"
#include "derhed/paths.hpp"
#include "derhed/shift_graph.hpp"

namespace derhed {

/// One offset per orbit of a block: Y[offsets[Y]] belongs to the heart.
struct Heart {
    std::vector<std::size_t> block;
    std::map<std::size_t, std::int64_t> offsets;

    std::int64_t offset(std::size_t orbit) const {
        auto it = offsets.find(orbit);
        if (it == offsets.end()) throw Error(ErrorKind::IncompleteHeart, "heart does not cover the orbit");
        return it->second;
    }

    friend bool operator==(const Heart&, const Heart&) = default;
};

/// A nonzero morphism Y[d_Y] -> Z[d_Z][m] between heart objects.
struct HeartDegree {
    ObjRef from;
    ObjRef to;
    std::int64_t m = 0;

    friend bool operator==(const HeartDegree&, const HeartDegree&) = default;
};

struct HeartCheck {
    std::vector<HeartDegree> violations;          // m < 0
    std::map<std::int64_t, std::size_t> degrees;  // m -> number of hom edges
    bool ok() const noexcept { return violations.empty(); }

    /// Hom(A, A[m]) vanishes outside m in {0, 1}.
    bool degrees_hereditary() const {
        return std::all_of(degrees.begin(), degrees.end(), [](const auto& kv) { return kv.first == 0 || kv.first == 1; });
    }
};

inline void require_covered(const ShiftGraph& g, const Heart& heart, const std::vector<std::size_t>& orbits) {
    std::vector<std::string> missing;
    for (std::size_t y : orbits) {
        if (heart.offsets.count(y) == 0) missing.push_back(g.orbit(y).id);
    }
    if (missing.empty()) return;
    std::string list;
    for (const auto& id : missing) list += (list.empty() ? "" : ", ") + id;
    throw Error(ErrorKind::IncompleteHeart, "heart does not cover: " + list);
}

/// For every hom edge (Y, Z, w) inside the block, m = w + d_Y - d_Z; the heart
/// passes iff no m is negative.
inline HeartCheck verify_heart(const ShiftGraph& g, const Heart& heart) {
    require_covered(g, heart, heart.block);
    const std::set<std::size_t> members(heart.block.begin(), heart.block.end());
    HeartCheck check;
    for (const auto& [pair, list] : g.homs()) {
        const auto [y, z] = pair;
        if (members.count(y) == 0 || members.count(z) == 0) continue;
        const std::int64_t dy = heart.offset(y);
        const std::int64_t dz = heart.offset(z);
        for (const HomEdge& e : list) {
            const std::int64_t m = e.weight + dy - dz;
            ++check.degrees[m];
            if (m < 0) check.violations.push_back({{y, dy}, {z, dz}, m});
        }
    }
    return check;
}

/// d_Y = min_weight(X, Y) for every Y of the block.
inline Heart extract_heart(const PathCalculus& calc, const std::vector<std::size_t>& block, std::size_t source) {
    const ShiftGraph& g = calc.graph();
    if (!calc.min_weight(source, source).is_finite()) {
        throw Error(ErrorKind::NegativeWalkAtSource,
                    "orbit " + g.orbit(source).id + " has a path from X[1] to X; no heart can be extracted");
    }
    Heart heart;
    heart.block = block;
    for (std::size_t y : block) {
        const Weight d = calc.min_weight(source, y);
        if (d.is_neg_inf()) {
            throw Error(ErrorKind::NegativeWalkAtSource,
                        "walks from " + g.orbit(source).id + " to " + g.orbit(y).id + " are unbounded below");
        }
        if (d.is_pos_inf()) {
            std::string msg = "orbit " + g.orbit(y).id + " is unreachable from " + g.orbit(source).id;
            if (g.genuine) msg += " (genuineness violation: every orbit of a block must be reachable)";
            throw Error(ErrorKind::Unreachable, msg);
        }
        heart.offsets[y] = d.value();
    }
    return heart;
}

enum class Verdict { Hereditary, NotHereditary, HereditaryWithinWindow };

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Hereditary: return "hereditary";
        case Verdict::NotHereditary: return "not-hereditary";
        case Verdict::HereditaryWithinWindow: return "hereditary-within-window";
    }
    return "?";
}

struct HereditaryReport {
    std::vector<std::size_t> block;
    Verdict verdict = Verdict::NotHereditary;
    std::map<std::size_t, bool> negative; // orbit -> has a path from X[1] to X
    std::optional<std::size_t> witness_orbit;
    std::optional<PathReport> witness; // closed path X[1] -> X
    std::optional<std::size_t> heart_source;
    std::optional<Heart> heart;
    std::optional<HeartCheck> heart_check;

    bool indicator_constant() const {
        if (negative.empty()) return true;
        const bool first = negative.begin()->second;
        return std::all_of(negative.begin(), negative.end(), [first](const auto& kv) { return kv.second == first; });
    }
};

inline void require_block(const PathCalculus& calc, const std::vector<std::size_t>& block) {
    std::vector<std::size_t> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& b : calc.blocks()) {
        if (b == sorted) return;
    }
    throw Error(ErrorKind::NotABlock, "orbit set is not a block of the graph");
}

inline std::vector<std::size_t> by_id(const ShiftGraph& g, std::vector<std::size_t> orbits) {
    std::sort(orbits.begin(), orbits.end(),
              [&](std::size_t a, std::size_t b) { return g.orbit(a).id < g.orbit(b).id; });
    return orbits;
}

inline HereditaryReport check_hereditary(const PathCalculus& calc, const std::vector<std::size_t>& block) {
    require_block(calc, block);
    const ShiftGraph& g = calc.graph();
    HereditaryReport report;
    report.block = block;
    std::sort(report.block.begin(), report.block.end());
    for (std::size_t x : report.block) report.negative[x] = calc.min_weight(x, x).is_neg_inf();

    const auto ordered = by_id(g, report.block);
    for (std::size_t x : ordered) {
        if (!report.negative[x]) continue;
        report.verdict = Verdict::NotHereditary;
        report.witness_orbit = x;
        report.witness = calc.path_exists({x, 1}, {x, 0});
        return report;
    }

    // Source: least total offset, then least id.
    std::optional<Error> first_failure;
    std::optional<std::int64_t> best;
    for (std::size_t x : ordered) {
        try {
            Heart heart = extract_heart(calc, report.block, x);
            std::int64_t total = 0;
            for (const auto& [y, d] : heart.offsets) total += d;
            if (best && total >= *best) continue;
            best = total;
            report.heart = std::move(heart);
            report.heart_source = x;
        } catch (const Error& e) {
            if (!first_failure) first_failure = e;
        }
    }
    if (!report.heart) throw *first_failure;
    report.heart_check = verify_heart(g, *report.heart);
    report.verdict = g.windowed ? Verdict::HereditaryWithinWindow : Verdict::Hereditary;
    return report;
}

/// H^p(obj): the component Y[n] contributes the heart object Y[d_Y] in degree
/// p = d_Y - n, since Y[n] = (Y[d_Y])[-p].
inline std::map<std::int64_t, FormalObject> cohomology(const ShiftGraph& g, const Heart& heart,
                                                       const FormalObject& obj) {
    std::vector<std::size_t> orbits;
    for (const ObjRef& r : obj.parts()) orbits.push_back(r.orbit);
    require_covered(g, heart, orbits);
    std::map<std::int64_t, FormalObject> out;
    for (const ObjRef& r : obj.parts()) {
        const std::int64_t d = heart.offset(r.orbit);
        out[d - r.offset].add({r.orbit, d});
    }
    return out;
}

enum class TruncationSide { AtMost, AtLeast };

/// tau_{<=n} keeps the components in degrees p <= n, tau_{>=n} those with p >= n.
inline FormalObject truncate(const ShiftGraph& g, const Heart& heart, const FormalObject& obj, std::int64_t n,
                             TruncationSide side) {
    std::vector<std::size_t> orbits;
    for (const ObjRef& r : obj.parts()) orbits.push_back(r.orbit);
    require_covered(g, heart, orbits);
    FormalObject out;
    for (const ObjRef& r : obj.parts()) {
        const std::int64_t p = heart.offset(r.orbit) - r.offset;
        if (side == TruncationSide::AtMost ? p <= n : p >= n) out.add(r);
    }
    return out;
}

} // namespace derhed
