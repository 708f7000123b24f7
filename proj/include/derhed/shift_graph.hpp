#pragma once

// Finite presentation of the indecomposables of a triangulated category modulo
// the shift functor. Each orbit {X[s] : s in Z} is one node; an edge of weight
// n from X to Y records Hom(X, Y[n]) != 0 together with its dimension and
// whether every nonzero morphism in it is invertible.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "derhed/error.hpp"
#include "derhed/linalg.hpp"

namespace derhed {

struct Orbit {
    std::string id;
    std::optional<int> period; // smallest n > 0 with X = X[n]
    std::size_t end_dim = 1;

    friend bool operator==(const Orbit&, const Orbit&) = default;
};

struct HomEdge {
    int weight = 0;
    std::size_t dim = 1;
    bool all_iso = false;

    friend bool operator==(const HomEdge&, const HomEdge&) = default;
};

using OrbitPair = std::pair<std::size_t, std::size_t>;

class ShiftGraph {
public:
    std::string name;
    std::uint32_t field_char = PrimeField::default_characteristic;
    bool genuine = false;
    bool windowed = false;

    std::size_t add_orbit(Orbit orbit) {
        if (index_.count(orbit.id) != 0) throw Error(ErrorKind::InvalidGraph, "duplicate orbit id '" + orbit.id + "'");
        index_.emplace(orbit.id, orbits_.size());
        orbits_.push_back(std::move(orbit));
        return orbits_.size() - 1;
    }

    /// Edges of a pair are kept sorted by weight.
    void add_edge(std::size_t from, std::size_t to, HomEdge edge) {
        if (from >= orbits_.size() || to >= orbits_.size()) throw Error(ErrorKind::UnknownOrbit, "edge uses an unknown orbit");
        auto& list = homs_[{from, to}];
        auto pos = std::upper_bound(list.begin(), list.end(), edge.weight,
                                    [](int w, const HomEdge& e) { return w < e.weight; });
        list.insert(pos, edge);
    }

    void add_edge(std::string_view from, std::string_view to, HomEdge edge) {
        add_edge(orbit_index(from), orbit_index(to), edge);
    }

    const std::vector<Orbit>& orbits() const noexcept { return orbits_; }
    std::size_t size() const noexcept { return orbits_.size(); }
    const Orbit& orbit(std::size_t i) const { return orbits_.at(i); }

    std::size_t orbit_index(std::string_view id) const {
        auto it = index_.find(std::string(id));
        if (it == index_.end()) throw Error(ErrorKind::UnknownOrbit, "unknown orbit '" + std::string(id) + "'");
        return it->second;
    }

    bool has_orbit(std::string_view id) const { return index_.count(std::string(id)) != 0; }

    const std::map<OrbitPair, std::vector<HomEdge>>& homs() const noexcept { return homs_; }

    const std::vector<HomEdge>& edges(std::size_t from, std::size_t to) const {
        static const std::vector<HomEdge> none;
        auto it = homs_.find({from, to});
        return it == homs_.end() ? none : it->second;
    }

    std::size_t edge_count() const {
        std::size_t n = 0;
        for (const auto& [pair, list] : homs_) n += list.size();
        return n;
    }

    friend bool operator==(const ShiftGraph& a, const ShiftGraph& b) {
        return a.name == b.name && a.field_char == b.field_char && a.genuine == b.genuine &&
               a.windowed == b.windowed && a.orbits_ == b.orbits_ && a.homs_ == b.homs_;
    }

private:
    std::vector<Orbit> orbits_;
    std::map<std::string, std::size_t> index_;
    std::map<OrbitPair, std::vector<HomEdge>> homs_;
};

/// X[offset] for the orbit X. Offsets of periodic orbits are reduced mod the period.
struct ObjRef {
    std::size_t orbit = 0;
    std::int64_t offset = 0;

    friend auto operator<=>(const ObjRef&, const ObjRef&) = default;
};

inline ObjRef normalized(const ShiftGraph& g, ObjRef r) {
    if (const auto& p = g.orbit(r.orbit).period) {
        r.offset %= *p;
        if (r.offset < 0) r.offset += *p;
    }
    return r;
}

/// A finite direct sum of shifted indecomposables, kept as a sorted multiset.
class FormalObject {
public:
    FormalObject() = default;
    FormalObject(std::initializer_list<ObjRef> parts) : parts_(parts) { std::sort(parts_.begin(), parts_.end()); }

    void add(ObjRef r) { parts_.insert(std::upper_bound(parts_.begin(), parts_.end(), r), r); }

    void merge(const FormalObject& other) {
        for (const ObjRef& r : other.parts_) add(r);
    }

    const std::vector<ObjRef>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    std::size_t size() const noexcept { return parts_.size(); }

    FormalObject normalized_in(const ShiftGraph& g) const {
        FormalObject out;
        for (const ObjRef& r : parts_) out.add(normalized(g, r));
        return out;
    }

    friend bool operator==(const FormalObject&, const FormalObject&) = default;

private:
    std::vector<ObjRef> parts_;
};

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;

    bool ok() const noexcept { return errors.empty(); }
};

namespace detail {

inline std::optional<int> joint_period(const ShiftGraph& g, std::size_t a, std::size_t b) {
    const auto& pa = g.orbit(a).period;
    const auto& pb = g.orbit(b).period;
    if (pa && pb) return std::gcd(*pa, *pb);
    if (pa) return pa;
    return pb;
}

} // namespace detail

/// Whether Hom(from, to[w]) != 0 in the effective support: stored weights plus
/// their translates by the period when either endpoint is periodic. With
/// `non_invertible`, only edges carrying a non-invertible morphism count.
inline bool supports(const ShiftGraph& g, std::size_t from, std::size_t to, std::int64_t w, bool non_invertible) {
    const auto period = detail::joint_period(g, from, to);
    for (const HomEdge& e : g.edges(from, to)) {
        if (non_invertible && e.all_iso) continue;
        const std::int64_t diff = e.weight - w;
        if (period ? diff % *period == 0 : diff == 0) return true;
    }
    return false;
}

inline std::string edge_label(const ShiftGraph& g, std::size_t from, std::size_t to, int w) {
    return "(" + g.orbit(from).id + ", " + g.orbit(to).id + ", " + std::to_string(w) + ")";
}

/// Structural checks. Errors make the graph unusable; warnings flag missing
/// cone witnesses on genuine instances: for a non-invertible u : X -> Y[n]
/// the cone triangle needs an orbit Z with non-invertible edges Y -> Z of
/// weight m and Z -> X of weight 1 - n - m.
inline ValidationReport validate(const ShiftGraph& g) {
    ValidationReport report;
    for (std::size_t x = 0; x < g.size(); ++x) {
        const Orbit& o = g.orbit(x);
        if (o.end_dim < 1) report.errors.push_back("orbit " + o.id + ": end_dim must be >= 1");
        if (o.period && *o.period < 1) report.errors.push_back("orbit " + o.id + ": period must be positive");
        bool identity = false;
        for (const HomEdge& e : g.edges(x, x)) {
            if (e.weight == 0) {
                identity = true;
                if (e.dim != o.end_dim) {
                    report.warnings.push_back("orbit " + o.id + ": identity edge dim " + std::to_string(e.dim) +
                                              " differs from end_dim " + std::to_string(o.end_dim));
                }
            }
        }
        if (!identity) report.errors.push_back("missing identity: orbit " + o.id + " has no (X, X, 0) edge");
        if (o.period && *o.period >= 1) {
            for (int w : {-*o.period, *o.period}) {
                const auto& list = g.edges(x, x);
                const bool found = std::any_of(list.begin(), list.end(),
                                               [w](const HomEdge& e) { return e.weight == w && e.all_iso; });
                if (!found) {
                    report.errors.push_back("periodicity closure: orbit " + o.id + " lacks the iso edge " +
                                            edge_label(g, x, x, w));
                }
            }
        }
    }

    for (const auto& [pair, list] : g.homs()) {
        const auto [from, to] = pair;
        for (std::size_t i = 0; i < list.size(); ++i) {
            const HomEdge& e = list[i];
            if (i > 0 && list[i - 1].weight == e.weight) {
                report.errors.push_back("duplicate weight: " + edge_label(g, from, to, e.weight));
            }
            if (e.dim < 1) report.errors.push_back("zero dimension: " + edge_label(g, from, to, e.weight));
            if (e.all_iso) {
                const auto& period = g.orbit(from).period;
                const bool aligned = period && *period >= 1 ? e.weight % *period == 0 : e.weight == 0;
                if (from != to) {
                    report.errors.push_back("all_iso on cross-orbit edge " + edge_label(g, from, to, e.weight));
                } else if (!aligned) {
                    report.errors.push_back("all_iso on a non-multiple of the period: " +
                                            edge_label(g, from, to, e.weight));
                }
            }
        }
    }
    if (!report.ok() || !g.genuine) return report;

    for (const auto& [pair, list] : g.homs()) {
        const auto [x, y] = pair;
        for (const HomEdge& e : list) {
            if (e.all_iso) continue;
            const std::int64_t needed = 1 - static_cast<std::int64_t>(e.weight);
            bool witnessed = false;
            for (std::size_t z = 0; z < g.size() && !witnessed; ++z) {
                for (const HomEdge& first : g.edges(y, z)) {
                    if (first.all_iso) continue;
                    if (supports(g, z, x, needed - first.weight, true)) {
                        witnessed = true;
                        break;
                    }
                }
            }
            if (!witnessed) {
                report.warnings.push_back("cone closure: no orbit Z with Y -> Z -> X[1-n] for edge " +
                                          edge_label(g, x, y, e.weight));
            }
        }
    }
    return report;
}

/// Hom and Ext^1 dimension tables of a hereditary abelian category with
/// finitely many indecomposables.
struct AbelianData {
    std::string name;
    std::vector<std::string> ids;
    std::vector<std::vector<std::size_t>> hom;  // hom[a][b] = dim Hom(A, B)
    std::vector<std::vector<std::size_t>> ext1; // ext1[a][b] = dim Ext^1(A, B)
};

/// Shift-graph of D^b of a hereditary abelian category: Hom(A, B[n]) is Hom for
/// n = 0, Ext^1 for n = 1 and zero otherwise.
inline ShiftGraph expand_hereditary(const AbelianData& data) {
    const std::size_t n = data.ids.size();
    if (data.hom.size() != n || data.ext1.size() != n) throw Error(ErrorKind::InvalidInput, "table size mismatch");
    ShiftGraph g;
    g.name = data.name;
    g.genuine = true;
    g.windowed = false;
    for (std::size_t a = 0; a < n; ++a) {
        if (data.hom[a].size() != n || data.ext1[a].size() != n) {
            throw Error(ErrorKind::InvalidInput, "table size mismatch");
        }
        if (data.hom[a][a] < 1) throw Error(ErrorKind::InvalidInput, "hom_dim(A, A) must be >= 1 for " + data.ids[a]);
        g.add_orbit({data.ids[a], std::nullopt, data.hom[a][a]});
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (data.hom[a][b] > 0) {
                g.add_edge(a, b, {0, data.hom[a][b], a == b && data.hom[a][a] == 1});
            }
            if (data.ext1[a][b] > 0) g.add_edge(a, b, {1, data.ext1[a][b], false});
        }
    }
    return g;
}

} // namespace derhed
