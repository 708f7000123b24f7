#pragma once

// Quivers, monomial path algebras and finite-dimensional representations.
//
// Paths are written in traversal order: the path "a.b" follows arrow a and
// then arrow b. Multiplication in the algebra is composition of maps, so the
// product p * q means "q, then p" and is nonzero only when q ends where p
// starts. Under this convention the left ideal A e_i is spanned by the paths
// starting at vertex i, which is the indecomposable projective P_i.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "derhed/error.hpp"
#include "derhed/linalg.hpp"

namespace derhed {

struct Arrow {
    std::string id;
    std::size_t source = 0;
    std::size_t target = 0;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
public:
    Quiver() = default;

    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
        : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (!vertex_index_.emplace(vertices_[i], i).second) {
                throw Error(ErrorKind::InvalidInput, "duplicate vertex id '" + vertices_[i] + "'");
            }
        }
        for (std::size_t i = 0; i < arrows_.size(); ++i) {
            const Arrow& a = arrows_[i];
            if (a.source >= vertices_.size() || a.target >= vertices_.size()) {
                throw Error(ErrorKind::InvalidInput, "arrow '" + a.id + "' uses an undeclared vertex");
            }
            if (!arrow_index_.emplace(a.id, i).second) {
                throw Error(ErrorKind::InvalidInput, "duplicate arrow id '" + a.id + "'");
            }
        }
    }

    /// Convenience constructor from (id, source id, target id) triples.
    static Quiver from_ids(std::vector<std::string> vertices,
                           const std::vector<std::tuple<std::string, std::string, std::string>>& arrows) {
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);
        std::vector<Arrow> built;
        for (const auto& [id, from, to] : arrows) {
            auto s = index.find(from);
            auto t = index.find(to);
            if (s == index.end() || t == index.end()) {
                throw Error(ErrorKind::InvalidInput, "arrow '" + id + "' uses an undeclared vertex");
            }
            built.push_back({id, s->second, t->second});
        }
        return Quiver(std::move(vertices), std::move(built));
    }

    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t arrow_count() const noexcept { return arrows_.size(); }

    std::size_t vertex(std::string_view id) const {
        auto it = vertex_index_.find(std::string(id));
        if (it == vertex_index_.end()) throw Error(ErrorKind::InvalidInput, "unknown vertex '" + std::string(id) + "'");
        return it->second;
    }

    std::size_t arrow(std::string_view id) const {
        auto it = arrow_index_.find(std::string(id));
        if (it == arrow_index_.end()) throw Error(ErrorKind::InvalidInput, "unknown arrow '" + std::string(id) + "'");
        return it->second;
    }

    friend bool operator==(const Quiver& a, const Quiver& b) {
        return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, std::size_t> vertex_index_;
    std::map<std::string, std::size_t> arrow_index_;
};

struct BasisPath {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> arrows; // traversal order; empty for e_v

    std::size_t length() const noexcept { return arrows.size(); }
};

/// An algebra element as coordinates over the path basis.
using AlgElem = Vector;

class MonomialAlgebra {
public:
    static constexpr std::size_t default_length_bound = 64;

    MonomialAlgebra(Quiver quiver, std::vector<std::vector<std::size_t>> relations, PrimeField field = PrimeField{},
                    std::size_t length_bound = default_length_bound)
        : quiver_(std::move(quiver)), relations_(std::move(relations)), field_(field) {
        for (const auto& rel : relations_) {
            if (rel.size() < 2) throw Error(ErrorKind::InvalidInput, "relations must be paths of length >= 2");
            for (std::size_t i = 0; i < rel.size(); ++i) {
                if (rel[i] >= quiver_.arrow_count()) throw Error(ErrorKind::InvalidInput, "relation uses unknown arrow");
                if (i > 0 && quiver_.arrows()[rel[i - 1]].target != quiver_.arrows()[rel[i]].source) {
                    throw Error(ErrorKind::InvalidInput, "relation is not a path: consecutive arrows do not compose");
                }
            }
        }
        for (const auto& v : quiver_.vertices()) {
            for (const auto& a : quiver_.arrows()) {
                if (a.id == "e_" + v) {
                    throw Error(ErrorKind::InvalidInput, "arrow id '" + a.id + "' clashes with a trivial path id");
                }
            }
        }
        enumerate_basis(length_bound);
        build_table();
    }

    const Quiver& quiver() const noexcept { return quiver_; }
    const PrimeField& field() const noexcept { return field_; }
    const std::vector<std::vector<std::size_t>>& relations() const noexcept { return relations_; }
    const std::vector<BasisPath>& basis() const noexcept { return basis_; }
    std::size_t dimension() const noexcept { return basis_.size(); }

    std::size_t trivial_path(std::size_t vertex) const { return trivial_[vertex]; }

    /// "e_<vertex>" for trivial paths, arrow ids joined by '.' otherwise.
    std::string path_id(std::size_t b) const {
        const BasisPath& p = basis_[b];
        if (p.arrows.empty()) return "e_" + quiver_.vertices()[p.source];
        std::string out;
        for (std::size_t i = 0; i < p.arrows.size(); ++i) {
            if (i > 0) out += '.';
            out += quiver_.arrows()[p.arrows[i]].id;
        }
        return out;
    }

    std::size_t basis_index(std::string_view id) const {
        auto it = by_id_.find(std::string(id));
        if (it == by_id_.end()) throw Error(ErrorKind::InvalidInput, "unknown basis path '" + std::string(id) + "'");
        return it->second;
    }

    /// Basis index of b_i * b_j ("b_j, then b_i"), or nullopt when zero.
    std::optional<std::size_t> product(std::size_t i, std::size_t j) const {
        const std::int64_t r = table_[i * basis_.size() + j];
        if (r < 0) return std::nullopt;
        return static_cast<std::size_t>(r);
    }

    AlgElem zero() const { return AlgElem(dimension(), 0); }

    AlgElem basis_element(std::size_t b) const {
        AlgElem e = zero();
        e[b] = 1;
        return e;
    }

    AlgElem multiply(const AlgElem& x, const AlgElem& y) const {
        AlgElem out = zero();
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < y.size(); ++j) {
                if (y[j] == 0) continue;
                if (auto k = product(i, j)) out[*k] = field_.add(out[*k], field_.mul(x[i], y[j]));
            }
        }
        return out;
    }

    void add_into(AlgElem& acc, const AlgElem& x) const {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = field_.add(acc[i], x[i]);
    }

    /// Basis paths lying in e_u A e_w, that is paths from w to u.
    std::vector<std::size_t> paths_between(std::size_t from, std::size_t to) const {
        std::vector<std::size_t> out;
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            if (basis_[b].source == from && basis_[b].target == to) out.push_back(b);
        }
        return out;
    }

    bool is_path_algebra() const noexcept { return relations_.empty(); }

private:
    bool ends_with_relation(const std::vector<std::size_t>& path) const {
        for (const auto& rel : relations_) {
            if (rel.size() <= path.size() && std::equal(rel.rbegin(), rel.rend(), path.rbegin())) return true;
        }
        return false;
    }

    bool contains_relation(const std::vector<std::size_t>& path) const {
        for (const auto& rel : relations_) {
            if (std::search(path.begin(), path.end(), rel.begin(), rel.end()) != path.end()) return true;
        }
        return false;
    }

    void enumerate_basis(std::size_t length_bound) {
        trivial_.resize(quiver_.vertex_count());
        std::vector<std::size_t> frontier;
        for (std::size_t v = 0; v < quiver_.vertex_count(); ++v) {
            trivial_[v] = basis_.size();
            frontier.push_back(basis_.size());
            basis_.push_back({v, v, {}});
        }
        for (std::size_t length = 1; !frontier.empty(); ++length) {
            std::vector<std::size_t> next;
            for (std::size_t b : frontier) {
                for (std::size_t a = 0; a < quiver_.arrow_count(); ++a) {
                    const Arrow& arrow = quiver_.arrows()[a];
                    if (arrow.source != basis_[b].target) continue;
                    std::vector<std::size_t> extended = basis_[b].arrows;
                    extended.push_back(a);
                    if (ends_with_relation(extended)) continue;
                    if (length > length_bound) {
                        throw Error(ErrorKind::InfiniteDimensional,
                                    "relation-free paths longer than " + std::to_string(length_bound) + " exist");
                    }
                    next.push_back(basis_.size());
                    basis_.push_back({basis_[b].source, arrow.target, std::move(extended)});
                }
            }
            frontier = std::move(next);
        }
        for (std::size_t b = 0; b < basis_.size(); ++b) by_id_.emplace(path_id(b), b);
    }

    void build_table() {
        const std::size_t n = basis_.size();
        std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> lookup;
        for (std::size_t b = 0; b < n; ++b) lookup.emplace(std::make_pair(basis_[b].source, basis_[b].arrows), b);
        table_.assign(n * n, -1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                // b_i * b_j: traverse b_j first.
                if (basis_[j].target != basis_[i].source) continue;
                std::vector<std::size_t> joined = basis_[j].arrows;
                joined.insert(joined.end(), basis_[i].arrows.begin(), basis_[i].arrows.end());
                if (contains_relation(joined)) continue;
                auto it = lookup.find({basis_[j].source, joined});
                if (it != lookup.end()) table_[i * n + j] = static_cast<std::int64_t>(it->second);
            }
        }
    }

    Quiver quiver_;
    std::vector<std::vector<std::size_t>> relations_;
    PrimeField field_;
    std::vector<BasisPath> basis_;
    std::vector<std::size_t> trivial_;
    std::map<std::string, std::size_t> by_id_;
    std::vector<std::int64_t> table_;
};

/// Builds the algebra from arrow-id relations, e.g. {{"a", "a"}}.
inline MonomialAlgebra build_algebra(const Quiver& q, const std::vector<std::vector<std::string>>& relations,
                                     PrimeField field = PrimeField{},
                                     std::size_t length_bound = MonomialAlgebra::default_length_bound) {
    std::vector<std::vector<std::size_t>> rels;
    for (const auto& rel : relations) {
        std::vector<std::size_t> path;
        for (const auto& id : rel) path.push_back(q.arrow(id));
        rels.push_back(std::move(path));
    }
    return MonomialAlgebra(q, std::move(rels), field, length_bound);
}

struct Representation {
    std::vector<std::size_t> dims; // per vertex
    std::vector<Matrix> maps;      // per arrow, target-dim x source-dim

    std::size_t total_dimension() const {
        std::size_t s = 0;
        for (auto d : dims) s += d;
        return s;
    }
};

/// Shape check plus vanishing of every relation on the representation.
inline void check_representation(const Quiver& q, const Representation& m,
                                 const std::vector<std::vector<std::size_t>>& relations = {}) {
    if (m.dims.size() != q.vertex_count() || m.maps.size() != q.arrow_count()) {
        throw Error(ErrorKind::InvalidInput, "representation does not match the quiver");
    }
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& arrow = q.arrows()[a];
        if (m.maps[a].rows() != m.dims[arrow.target] || m.maps[a].cols() != m.dims[arrow.source]) {
            throw Error(ErrorKind::InvalidInput, "map for arrow '" + arrow.id + "' has the wrong shape");
        }
    }
    for (const auto& rel : relations) {
        Matrix acc = m.maps[rel.front()];
        for (std::size_t i = 1; i < rel.size(); ++i) acc = m.maps[rel[i]] * acc;
        if (!acc.is_zero()) throw Error(ErrorKind::InvalidInput, "representation violates a relation");
    }
}

/// dim Hom(M, N): families (f_v) with f_t(a) M_a = N_a f_s(a) for every arrow.
inline std::size_t rep_hom_dim(const Quiver& q, const Representation& m, const Representation& n) {
    check_representation(q, m);
    check_representation(q, n);
    const PrimeField field = q.arrow_count() > 0 ? m.maps.front().field() : PrimeField{};

    std::vector<std::size_t> offset(q.vertex_count() + 1, 0);
    for (std::size_t v = 0; v < q.vertex_count(); ++v) offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    const std::size_t unknowns = offset.back();
    // f_v[i][k] lives at offset[v] + i * dim M_v + k.
    auto var = [&](std::size_t v, std::size_t i, std::size_t k) { return offset[v] + i * m.dims[v] + k; };

    std::size_t equations = 0;
    for (const auto& a : q.arrows()) equations += n.dims[a.target] * m.dims[a.source];

    Matrix system(field, equations, unknowns);
    std::size_t row = 0;
    for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
        const Arrow& a = q.arrows()[ai];
        const Matrix& ma = m.maps[ai];
        const Matrix& na = n.maps[ai];
        for (std::size_t i = 0; i < n.dims[a.target]; ++i) {
            for (std::size_t j = 0; j < m.dims[a.source]; ++j, ++row) {
                for (std::size_t k = 0; k < m.dims[a.target]; ++k) {
                    auto& e = system(row, var(a.target, i, k));
                    e = field.add(e, ma(k, j));
                }
                for (std::size_t k = 0; k < n.dims[a.source]; ++k) {
                    auto& e = system(row, var(a.source, k, j));
                    e = field.sub(e, na(i, k));
                }
            }
        }
    }
    return unknowns - rank(system);
}

/// Euler form <d, e> = sum_v d_v e_v - sum_{a: u -> v} d_u e_v.
inline std::int64_t euler_form(const Quiver& q, const std::vector<std::size_t>& d, const std::vector<std::size_t>& e) {
    std::int64_t s = 0;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) s += static_cast<std::int64_t>(d[v] * e[v]);
    for (const auto& a : q.arrows()) s -= static_cast<std::int64_t>(d[a.source] * e[a.target]);
    return s;
}

/// dim Ext^1(M, N) over the path algebra of q (no relations).
inline std::size_t euler_ext1_dim(const Quiver& q, const Representation& m, const Representation& n) {
    const auto hom = static_cast<std::int64_t>(rep_hom_dim(q, m, n));
    const std::int64_t ext = hom - euler_form(q, m.dims, n.dims);
    if (ext < 0) {
        throw Error(ErrorKind::NegativeResult, "Euler form exceeds dim Hom; input is not a representation of this quiver");
    }
    return static_cast<std::size_t>(ext);
}

inline Representation direct_sum(const Quiver& q, const Representation& m, const Representation& n) {
    Representation out;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) out.dims.push_back(m.dims[v] + n.dims[v]);
    for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
        const Arrow& a = q.arrows()[ai];
        const Matrix& x = m.maps[ai];
        const Matrix& y = n.maps[ai];
        Matrix sum(x.field(), out.dims[a.target], out.dims[a.source]);
        for (std::size_t i = 0; i < x.rows(); ++i) {
            for (std::size_t j = 0; j < x.cols(); ++j) sum(i, j) = x(i, j);
        }
        for (std::size_t i = 0; i < y.rows(); ++i) {
            for (std::size_t j = 0; j < y.cols(); ++j) sum(x.rows() + i, x.cols() + j) = y(i, j);
        }
        out.maps.push_back(std::move(sum));
    }
    return out;
}

/// Orientation word for A_n: one character per arrow, '>' (or 'R') for i -> i+1
/// and '<' (or 'L') for i+1 -> i. The arrows "→" and "←" are accepted too.
inline std::vector<bool> parse_orientation(std::string_view word) {
    std::vector<bool> forward;
    for (std::size_t i = 0; i < word.size();) {
        if (word.substr(i, 3) == "→") {
            forward.push_back(true);
            i += 3;
        } else if (word.substr(i, 3) == "←") {
            forward.push_back(false);
            i += 3;
        } else if (word[i] == '>' || word[i] == 'R' || word[i] == 'r') {
            forward.push_back(true);
            ++i;
        } else if (word[i] == '<' || word[i] == 'L' || word[i] == 'l') {
            forward.push_back(false);
            ++i;
        } else {
            throw Error(ErrorKind::InvalidInput, "orientation word may only contain '>' and '<'");
        }
    }
    return forward;
}

/// Linear quiver 1 - 2 - ... - n with arrows a1..a{n-1} oriented by `forward`.
inline Quiver a_n_quiver(std::size_t n, const std::vector<bool>& forward) {
    if (forward.size() + 1 != n) throw Error(ErrorKind::InvalidInput, "orientation word must have length n - 1");
    std::vector<std::string> vertices;
    for (std::size_t v = 1; v <= n; ++v) vertices.push_back(std::to_string(v));
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (forward[i]) {
            arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
        } else {
            arrows.push_back({"a" + std::to_string(i + 1), i + 1, i});
        }
    }
    return Quiver(std::move(vertices), std::move(arrows));
}

/// Interval module M[first, last] (0-based, inclusive) of a linear quiver:
/// k on each vertex of the interval, identity along arrows inside it.
inline Representation interval_representation(const Quiver& q, std::size_t first, std::size_t last,
                                              PrimeField field = PrimeField{}) {
    Representation rep;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) rep.dims.push_back(v >= first && v <= last ? 1 : 0);
    for (const auto& a : q.arrows()) {
        Matrix m(field, rep.dims[a.target], rep.dims[a.source]);
        if (rep.dims[a.target] == 1 && rep.dims[a.source] == 1) m(0, 0) = 1;
        rep.maps.push_back(std::move(m));
    }
    return rep;
}

} // namespace derhed
