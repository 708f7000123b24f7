#pragma once

// Morphisms in the homotopy category of bounded complexes of projectives over
// a monomial algebra.
//
// A component in degree k is a list of vertices (v_1, ..., v_r), standing for
// P_{v_1} + ... + P_{v_r}. Elements of such a sum are row vectors and a map
// P_v -> P_w is right multiplication by an element of e_v A e_w, so a
// differential d^k : C^k -> C^{k+1} is an |C^k| x |C^{k+1}| matrix over A and
// "first D, then E" is the matrix product D * E.
//
// Hom(X, Y[n]) is computed with the unsigned convention: degree-n chain maps
// F^k : X^k -> Y^{k+n} with D_X^k F^{k+1} = F^k D_Y^{k+n}, modulo
// F^k = H^k D_Y^{k+n-1} + D_X^k H^{k+1}. Negating the differential of Y gives
// an isomorphic complex, so the dimensions agree with the signed shift.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "derhed/error.hpp"
#include "derhed/linalg.hpp"
#include "derhed/quiver.hpp"
#include "derhed/shift_graph.hpp"

namespace derhed {

struct AlgMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<AlgElem> entries; // row-major

    AlgMatrix() = default;
    AlgMatrix(const MonomialAlgebra& alg, std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, alg.zero()) {}

    AlgElem& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const AlgElem& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    bool is_zero() const {
        for (const auto& e : entries) {
            for (Elem x : e) {
                if (x != 0) return false;
            }
        }
        return true;
    }

    friend bool operator==(const AlgMatrix&, const AlgMatrix&) = default;
};

inline AlgMatrix multiply(const MonomialAlgebra& alg, const AlgMatrix& a, const AlgMatrix& b) {
    if (a.cols != b.rows) throw Error(ErrorKind::InvalidComplex, "matrix shapes do not compose");
    AlgMatrix out(alg, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t l = 0; l < a.cols; ++l) {
            for (std::size_t j = 0; j < b.cols; ++j) alg.add_into(out.at(i, j), alg.multiply(a.at(i, l), b.at(l, j)));
        }
    }
    return out;
}

class ProjComplex {
public:
    ProjComplex() = default;

    /// Empty components are dropped; a missing differential means zero.
    ProjComplex(std::map<int, std::vector<std::size_t>> components, std::map<int, AlgMatrix> differentials)
        : differentials_(std::move(differentials)) {
        for (auto& [k, vs] : components) {
            if (!vs.empty()) components_.emplace(k, std::move(vs));
        }
    }

    static ProjComplex stalk(std::vector<std::size_t> vertices, int degree = 0) {
        return ProjComplex({{degree, std::move(vertices)}}, {});
    }

    bool is_zero() const noexcept { return components_.empty(); }
    int lo() const { return components_.empty() ? 0 : components_.begin()->first; }
    int hi() const { return components_.empty() ? -1 : components_.rbegin()->first; }

    const std::vector<std::size_t>& component(int k) const {
        static const std::vector<std::size_t> empty;
        auto it = components_.find(k);
        return it == components_.end() ? empty : it->second;
    }

    /// d^k : C^k -> C^{k+1}, zero-filled when absent.
    AlgMatrix differential(const MonomialAlgebra& alg, int k) const {
        auto it = differentials_.find(k);
        if (it != differentials_.end()) return it->second;
        return AlgMatrix(alg, component(k).size(), component(k + 1).size());
    }

    const std::map<int, std::vector<std::size_t>>& components() const noexcept { return components_; }
    const std::map<int, AlgMatrix>& differentials() const noexcept { return differentials_; }

    /// C[s]: (C[s])^k = C^{k+s}, differential negated for odd s.
    ProjComplex shifted(const MonomialAlgebra& alg, int s) const {
        std::map<int, std::vector<std::size_t>> comps;
        for (const auto& [k, vs] : components_) comps.emplace(k - s, vs);
        std::map<int, AlgMatrix> diffs;
        for (const auto& [k, d] : differentials_) {
            AlgMatrix m = d;
            if (s % 2 != 0) {
                for (auto& e : m.entries) {
                    for (auto& x : e) x = alg.field().neg(x);
                }
            }
            diffs.emplace(k - s, std::move(m));
        }
        return ProjComplex(std::move(comps), std::move(diffs));
    }

    /// Shift so that the top nonzero degree is 0.
    ProjComplex normalized(const MonomialAlgebra& alg) const {
        if (is_zero()) return *this;
        return shifted(alg, hi());
    }

private:
    std::map<int, std::vector<std::size_t>> components_;
    std::map<int, AlgMatrix> differentials_;
};

struct ComplexReport {
    bool valid = true;
    std::optional<int> failing_degree;
    std::vector<std::string> failures;

    void fail(int degree, std::string message) {
        if (valid) failing_degree = degree;
        valid = false;
        failures.push_back("degree " + std::to_string(degree) + ": " + std::move(message));
    }
};

/// Shapes, vertex compatibility of every entry and d^{k+1} d^k = 0.
inline ComplexReport check_complex(const MonomialAlgebra& alg, const ProjComplex& c) {
    ComplexReport report;
    for (const auto& [k, vs] : c.components()) {
        for (std::size_t v : vs) {
            if (v >= alg.quiver().vertex_count()) report.fail(k, "component uses an unknown vertex");
        }
    }
    for (const auto& [k, d] : c.differentials()) {
        const auto& src = c.component(k);
        const auto& dst = c.component(k + 1);
        if (d.rows != src.size() || d.cols != dst.size() || d.entries.size() != d.rows * d.cols) {
            report.fail(k, "differential shape does not match the components");
            continue;
        }
        for (std::size_t i = 0; i < d.rows; ++i) {
            for (std::size_t j = 0; j < d.cols; ++j) {
                const AlgElem& e = d.at(i, j);
                if (e.size() != alg.dimension()) {
                    report.fail(k, "entry has the wrong coordinate length");
                    continue;
                }
                for (std::size_t b = 0; b < e.size(); ++b) {
                    if (e[b] == 0) continue;
                    const BasisPath& p = alg.basis()[b];
                    if (p.target != src[i] || p.source != dst[j]) {
                        report.fail(k, "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") uses path '" +
                                           alg.path_id(b) + "' outside e_v A e_w");
                    }
                }
            }
        }
    }
    if (!report.valid) return report;
    for (const auto& [k, d] : c.differentials()) {
        if (c.differentials().count(k + 1) == 0) continue;
        if (!multiply(alg, d, c.differentials().at(k + 1)).is_zero()) report.fail(k, "d^2 != 0");
    }
    return report;
}

/// Graded maps X -> Y of degree n: F^k : X^k -> Y^{k+n}, one coordinate per
/// compatible basis path in every matrix slot. Keeps pointers to X and Y;
/// to_maps is only valid while both are alive.
class GradedMapSpace {
public:
    GradedMapSpace(const MonomialAlgebra& alg, const ProjComplex& x, const ProjComplex& y, int n)
        : alg_(&alg), x_(&x), y_(&y), shift_(n) {
        for (const auto& [k, xs] : x.components()) {
            const auto& ys = y.component(k + n);
            for (std::size_t i = 0; i < xs.size(); ++i) {
                for (std::size_t j = 0; j < ys.size(); ++j) {
                    for (std::size_t b : alg.paths_between(ys[j], xs[i])) {
                        index_.emplace(std::make_tuple(k, i, j, b), slots_.size());
                        slots_.push_back({k, i, j, b});
                    }
                }
            }
        }
    }

    std::size_t size() const noexcept { return slots_.size(); }
    int shift() const noexcept { return shift_; }

    std::map<int, AlgMatrix> to_maps(const Vector& coords) const {
        std::map<int, AlgMatrix> out;
        for (const auto& [k, xs] : x_->components()) {
            const std::size_t cols = y_->component(k + shift_).size();
            if (cols > 0) out.emplace(k, AlgMatrix(*alg_, xs.size(), cols));
        }
        for (std::size_t s = 0; s < slots_.size(); ++s) {
            if (coords[s] == 0) continue;
            const Slot& slot = slots_[s];
            out.at(slot.degree).at(slot.row, slot.col)[slot.path] = coords[s];
        }
        return out;
    }

    Vector from_maps(const std::map<int, AlgMatrix>& maps) const {
        Vector coords(slots_.size(), 0);
        for (const auto& [k, m] : maps) {
            for (std::size_t i = 0; i < m.rows; ++i) {
                for (std::size_t j = 0; j < m.cols; ++j) {
                    const AlgElem& e = m.at(i, j);
                    for (std::size_t b = 0; b < e.size(); ++b) {
                        if (e[b] == 0) continue;
                        auto it = index_.find(std::make_tuple(k, i, j, b));
                        if (it == index_.end()) throw Error(ErrorKind::InvalidComplex, "map leaves e_v A e_w");
                        coords[it->second] = e[b];
                    }
                }
            }
        }
        return coords;
    }

private:
    struct Slot {
        int degree;
        std::size_t row;
        std::size_t col;
        std::size_t path;
    };

    const MonomialAlgebra* alg_;
    const ProjComplex* x_;
    const ProjComplex* y_;
    int shift_;
    std::vector<Slot> slots_;
    std::map<std::tuple<int, std::size_t, std::size_t, std::size_t>, std::size_t> index_;
};

namespace detail {

inline AlgMatrix matrix_or_zero(const MonomialAlgebra& alg, const std::map<int, AlgMatrix>& maps, int k,
                                std::size_t rows, std::size_t cols) {
    auto it = maps.find(k);
    if (it != maps.end()) return it->second;
    return AlgMatrix(alg, rows, cols);
}

inline AlgMatrix difference(const MonomialAlgebra& alg, AlgMatrix a, const AlgMatrix& b) {
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        for (std::size_t c = 0; c < a.entries[i].size(); ++c) {
            a.entries[i][c] = alg.field().sub(a.entries[i][c], b.entries[i][c]);
        }
    }
    return a;
}

inline AlgMatrix sum(const MonomialAlgebra& alg, AlgMatrix a, const AlgMatrix& b) {
    for (std::size_t i = 0; i < a.entries.size(); ++i) alg.add_into(a.entries[i], b.entries[i]);
    return a;
}

inline void append_flat(Vector& out, const AlgMatrix& m) {
    for (const auto& e : m.entries) out.insert(out.end(), e.begin(), e.end());
}

} // namespace detail

/// Chain maps and null-homotopic maps of degree n from X to Y.
struct HomSpace {
    GradedMapSpace maps;
    std::vector<Vector> cycles;     // basis of the chain maps
    std::vector<Vector> boundaries; // spanning set of the null-homotopic maps
    std::size_t boundary_rank = 0;

    std::size_t dimension() const { return cycles.size() - boundary_rank; }
};

inline void check_same_algebra(const MonomialAlgebra& alg, const ProjComplex& c) {
    for (const auto& [k, vs] : c.components()) {
        for (std::size_t v : vs) {
            if (v >= alg.quiver().vertex_count()) {
                throw Error(ErrorKind::AlgebraMismatch, "complex uses a vertex the algebra does not have");
            }
        }
    }
    for (const auto& [k, d] : c.differentials()) {
        for (const auto& e : d.entries) {
            if (e.size() != alg.dimension()) {
                throw Error(ErrorKind::AlgebraMismatch, "complex entries are not elements of this algebra");
            }
        }
    }
}

inline HomSpace compute_hom(const MonomialAlgebra& alg, const ProjComplex& x, const ProjComplex& y, int n) {
    check_same_algebra(alg, x);
    check_same_algebra(alg, y);
    GradedMapSpace space(alg, x, y, n);
    const PrimeField& field = alg.field();

    // Chain condition D_X^k F^{k+1} - F^k D_Y^{k+n} = 0 for k in [lo-1, hi].
    auto chain_defect = [&](const Vector& coords) {
        const auto f = space.to_maps(coords);
        Vector flat;
        if (x.is_zero()) return flat;
        for (int k = x.lo() - 1; k <= x.hi(); ++k) {
            const std::size_t rows = x.component(k).size();
            const std::size_t cols = y.component(k + n + 1).size();
            if (rows == 0 || cols == 0) continue;
            const AlgMatrix left = multiply(
                alg, x.differential(alg, k), detail::matrix_or_zero(alg, f, k + 1, x.component(k + 1).size(), cols));
            const AlgMatrix right = multiply(alg, detail::matrix_or_zero(alg, f, k, rows, y.component(k + n).size()),
                                             y.differential(alg, k + n));
            detail::append_flat(flat, detail::difference(alg, left, right));
        }
        return flat;
    };

    HomSpace result{space, {}, {}, 0};
    if (space.size() == 0) return result;

    std::vector<Vector> columns;
    for (std::size_t s = 0; s < space.size(); ++s) {
        Vector unit(space.size(), 0);
        unit[s] = 1;
        columns.push_back(chain_defect(unit));
    }
    const std::size_t equations = columns.front().size();
    result.cycles = nullspace(from_columns(field, equations, columns));

    // Null-homotopic maps: F^k = H^k D_Y^{k+n-1} + D_X^k H^{k+1}.
    GradedMapSpace homotopies(alg, x, y, n - 1);
    for (std::size_t s = 0; s < homotopies.size(); ++s) {
        Vector unit(homotopies.size(), 0);
        unit[s] = 1;
        const auto h = homotopies.to_maps(unit);
        std::map<int, AlgMatrix> f;
        for (int k = x.lo(); k <= x.hi(); ++k) {
            const std::size_t rows = x.component(k).size();
            const std::size_t cols = y.component(k + n).size();
            if (rows == 0 || cols == 0) continue;
            const AlgMatrix through_y = multiply(
                alg, detail::matrix_or_zero(alg, h, k, rows, y.component(k + n - 1).size()), y.differential(alg, k + n - 1));
            const AlgMatrix through_x = multiply(
                alg, x.differential(alg, k), detail::matrix_or_zero(alg, h, k + 1, x.component(k + 1).size(), cols));
            f.emplace(k, detail::sum(alg, through_y, through_x));
        }
        result.boundaries.push_back(space.from_maps(f));
    }
    if (!result.boundaries.empty()) {
        result.boundary_rank = rank(from_columns(field, space.size(), result.boundaries));
    }
    return result;
}

/// dim Hom(X, Y[n]) in the homotopy category.
inline std::size_t hom_k_dim(const MonomialAlgebra& alg, const ProjComplex& x, const ProjComplex& y, int n) {
    return compute_hom(alg, x, y, n).dimension();
}

/// Composite "f, then g" of graded maps f : X -> Y[n] and g : Y -> Z[m].
inline std::map<int, AlgMatrix> compose(const MonomialAlgebra& alg, const std::map<int, AlgMatrix>& f,
                                        const std::map<int, AlgMatrix>& g, int n) {
    std::map<int, AlgMatrix> out;
    for (const auto& [k, fk] : f) {
        auto it = g.find(k + n);
        if (it == g.end()) continue;
        out.emplace(k, multiply(alg, fk, it->second));
    }
    return out;
}

/// End(X) in the homotopy category as an abstract algebra, together with the
/// data needed to decide locality and to test elements for invertibility.
class EndomorphismAlgebra {
public:
    EndomorphismAlgebra(const MonomialAlgebra& alg, const ProjComplex& x)
        : alg_(&alg), hom_(compute_hom(alg, x, x, 0)) {
        const PrimeField& field = alg.field();
        const std::size_t ambient = hom_.maps.size();

        // Representatives of chain maps modulo null-homotopic ones.
        std::vector<Vector> spanning = hom_.boundaries;
        std::size_t current = hom_.boundary_rank;
        for (const Vector& z : hom_.cycles) {
            spanning.push_back(z);
            const std::size_t r = rank(from_columns(field, ambient, spanning));
            if (r > current) {
                reps_.push_back(z);
                current = r;
            } else {
                spanning.pop_back();
            }
        }
        const std::size_t m = reps_.size();
        if (m == 0) return;
        if (field.characteristic() <= m) {
            throw Error(ErrorKind::FieldTooSmall, "field characteristic " + std::to_string(field.characteristic()) +
                                                      " does not exceed dim End = " + std::to_string(m));
        }

        // Structure constants: rep_a * rep_b = "rep_b, then rep_a".
        structure_.assign(m * m, Vector(m, 0));
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) {
                const auto composite =
                    compose(alg, hom_.maps.to_maps(reps_[b]), hom_.maps.to_maps(reps_[a]), 0);
                structure_[a * m + b] = coordinates(hom_.maps.from_maps(composite));
            }
        }
        compute_radical();
    }

    std::size_t dimension() const noexcept { return reps_.size(); }
    std::size_t radical_dimension() const noexcept { return radical_.size(); }
    bool is_local() const noexcept { return local_; }
    const HomSpace& hom() const noexcept { return hom_; }

    /// Coordinates over the representatives of a chain map X -> X.
    Vector coordinates(const Vector& chain_map) const {
        const PrimeField& field = alg_->field();
        std::vector<Vector> cols = hom_.boundaries;
        cols.insert(cols.end(), reps_.begin(), reps_.end());
        auto solution = solve(from_columns(field, hom_.maps.size(), cols), chain_map);
        if (!solution) throw Error(ErrorKind::InvalidComplex, "composite is not a chain map");
        return Vector(solution->begin() + static_cast<std::ptrdiff_t>(hom_.boundaries.size()), solution->end());
    }

    /// True when the chain map X -> X is a unit of End(X). Requires locality.
    bool is_invertible(const Vector& chain_map) const {
        const Vector c = coordinates(chain_map);
        std::vector<Vector> cols = radical_;
        const std::size_t before = cols.empty() ? 0 : rank(from_columns(alg_->field(), c.size(), cols));
        cols.push_back(c);
        return rank(from_columns(alg_->field(), c.size(), cols)) > before;
    }

private:
    Vector product(const Vector& x, const Vector& y) const {
        const PrimeField& field = alg_->field();
        const std::size_t m = reps_.size();
        Vector out(m, 0);
        for (std::size_t a = 0; a < m; ++a) {
            if (x[a] == 0) continue;
            for (std::size_t b = 0; b < m; ++b) {
                if (y[b] == 0) continue;
                const Elem s = field.mul(x[a], y[b]);
                for (std::size_t c = 0; c < m; ++c) out[c] = field.add(out[c], field.mul(s, structure_[a * m + b][c]));
            }
        }
        return out;
    }

    // With char p > dim End, rad End = {x : Tr(L_{xy}) = 0 for all y}. The
    // quotient is then local iff it is a field: commutative, with the
    // Frobenius x -> x^p fixing a one-dimensional subspace.
    void compute_radical() {
        const PrimeField& field = alg_->field();
        const std::size_t m = reps_.size();
        Vector trace_of_basis(m, 0);
        for (std::size_t c = 0; c < m; ++c) {
            for (std::size_t b = 0; b < m; ++b) trace_of_basis[c] = field.add(trace_of_basis[c], structure_[c * m + b][b]);
        }
        Matrix form(field, m, m);
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) {
                Elem t = 0;
                for (std::size_t c = 0; c < m; ++c) t = field.add(t, field.mul(structure_[a * m + b][c], trace_of_basis[c]));
                form(a, b) = t;
            }
        }
        radical_ = nullspace(form);
        const std::size_t quotient_dim = m - radical_.size();
        if (quotient_dim == 1) {
            local_ = true;
            return;
        }

        // Basis of the quotient: unit vectors not in span(radical).
        std::vector<Vector> span = radical_;
        std::vector<Vector> complement;
        for (std::size_t a = 0; a < m && complement.size() < quotient_dim; ++a) {
            Vector e(m, 0);
            e[a] = 1;
            span.push_back(e);
            if (rank(from_columns(field, m, span)) == span.size()) {
                complement.push_back(e);
            } else {
                span.pop_back();
            }
        }
        const Matrix basis_matrix = from_columns(field, m, span); // radical first, then complement
        auto quotient_coords = [&](const Vector& v) {
            auto sol = solve(basis_matrix, v);
            return Vector(sol->begin() + static_cast<std::ptrdiff_t>(radical_.size()), sol->end());
        };
        auto lift = [&](const Vector& q) {
            Vector v(m, 0);
            for (std::size_t i = 0; i < q.size(); ++i) {
                for (std::size_t c = 0; c < m; ++c) v[c] = field.add(v[c], field.mul(q[i], complement[i][c]));
            }
            return v;
        };

        for (std::size_t a = 0; a < quotient_dim; ++a) {
            for (std::size_t b = a + 1; b < quotient_dim; ++b) {
                const Vector ab = quotient_coords(product(complement[a], complement[b]));
                const Vector ba = quotient_coords(product(complement[b], complement[a]));
                if (ab != ba) {
                    local_ = false;
                    return;
                }
            }
        }

        Matrix frobenius_minus_id(field, quotient_dim, quotient_dim);
        for (std::size_t a = 0; a < quotient_dim; ++a) {
            Vector unit(quotient_dim, 0);
            unit[a] = 1;
            Vector result = unit;
            Vector base = unit;
            bool first = true;
            for (std::uint64_t e = field.characteristic(); e > 0; e >>= 1u) {
                if (e & 1u) {
                    result = first ? base : quotient_coords(product(lift(result), lift(base)));
                    first = false;
                }
                if (e > 1) base = quotient_coords(product(lift(base), lift(base)));
            }
            for (std::size_t c = 0; c < quotient_dim; ++c) {
                frobenius_minus_id(c, a) = field.sub(result[c], unit[c]);
            }
        }
        local_ = nullspace(frobenius_minus_id).size() == 1;
    }

    const MonomialAlgebra* alg_;
    HomSpace hom_;
    std::vector<Vector> reps_;
    std::vector<Vector> structure_;
    std::vector<Vector> radical_;
    bool local_ = false;
};

inline bool is_indecomposable(const MonomialAlgebra& alg, const ProjComplex& x) {
    if (x.is_zero()) return false;
    return EndomorphismAlgebra(alg, x).is_local();
}

/// Whether X is isomorphic to Y[n], given End(X) local: some composite of a
/// chain map X -> Y[n] with a chain map Y[n] -> X is a unit of End(X).
inline bool isomorphic_to_shift(const MonomialAlgebra& alg, const EndomorphismAlgebra& end_x, const ProjComplex& x,
                                const ProjComplex& y, int n) {
    const HomSpace there = compute_hom(alg, x, y, n);
    if (there.dimension() == 0) return false;
    const HomSpace back = compute_hom(alg, y, x, -n);
    if (back.dimension() == 0) return false;
    for (const Vector& f : there.cycles) {
        const auto fm = there.maps.to_maps(f);
        for (const Vector& g : back.cycles) {
            const auto composite = compose(alg, fm, back.maps.to_maps(g), n);
            if (end_x.is_invertible(end_x.hom().maps.from_maps(composite))) return true;
        }
    }
    return false;
}

struct NamedComplex {
    std::string id;
    ProjComplex complex;
};

/// One orbit per complex, edges for every n in [-window, window] with
/// Hom(X, Y[n]) != 0. Each complex is normalized to top degree 0 and must be
/// indecomposable; no two may be isomorphic up to shift.
inline ShiftGraph build_shiftgraph_from_complexes(const MonomialAlgebra& alg, const std::vector<NamedComplex>& reps,
                                                  int window, std::string name = "complexes") {
    if (window < 0) throw Error(ErrorKind::InvalidInput, "window must be nonnegative");
    std::vector<ProjComplex> complexes;
    complexes.reserve(reps.size());
    for (const auto& r : reps) {
        const ComplexReport report = check_complex(alg, r.complex);
        if (!report.valid) throw Error(ErrorKind::InvalidComplex, r.id + ": " + report.failures.front());
        complexes.push_back(r.complex.normalized(alg));
    }
    const std::size_t count = complexes.size();
    std::vector<EndomorphismAlgebra> ends;
    ends.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (complexes[i].is_zero()) throw Error(ErrorKind::NotIndecomposable, reps[i].id + " is the zero complex");
        ends.emplace_back(alg, complexes[i]);
        if (!ends.back().is_local()) throw Error(ErrorKind::NotIndecomposable, reps[i].id + " is decomposable");
    }

    const std::size_t span = static_cast<std::size_t>(2 * window + 1);
    // dims[(i * count + j) * span + (n + window)] = dim Hom(X_i, X_j[n])
    std::vector<std::size_t> dims(count * count * span, 0);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            for (int n = -window; n <= window; ++n) {
                dims[(i * count + j) * span + static_cast<std::size_t>(n + window)] =
                    hom_k_dim(alg, complexes[i], complexes[j], n);
            }
        }
    }
    auto dim = [&](std::size_t i, std::size_t j, int n) {
        return dims[(i * count + j) * span + static_cast<std::size_t>(n + window)];
    };

    std::vector<std::optional<int>> period(count);
    for (std::size_t i = 0; i < count; ++i) {
        for (int s = 1; s <= window && !period[i]; ++s) {
            if (dim(i, i, s) > 0 && dim(i, i, -s) > 0 && isomorphic_to_shift(alg, ends[i], complexes[i], complexes[i], s)) {
                period[i] = s;
            }
        }
    }
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            for (int n = -window; n <= window; ++n) {
                if (dim(i, j, n) == 0 || dim(j, i, -n) == 0) continue;
                if (isomorphic_to_shift(alg, ends[i], complexes[i], complexes[j], n)) {
                    throw Error(ErrorKind::IsomorphicReps,
                                reps[i].id + " is isomorphic to " + reps[j].id + "[" + std::to_string(n) + "]");
                }
            }
        }
    }

    ShiftGraph g;
    g.name = std::move(name);
    g.field_char = alg.field().characteristic();
    g.genuine = true;
    g.windowed = true;
    for (std::size_t i = 0; i < count; ++i) g.add_orbit({reps[i].id, period[i], ends[i].dimension()});
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            const auto joint = detail::joint_period(g, i, j);
            std::set<int> residues;
            for (int n = -window; n <= window; ++n) {
                const std::size_t d = dim(i, j, n);
                if (d == 0) continue;
                int w = n;
                if (joint) {
                    w = ((n % *joint) + *joint) % *joint;
                    if (!residues.insert(w).second) continue;
                }
                g.add_edge(i, j, {w, d, i == j && w == 0 && ends[i].dimension() == 1});
            }
            if (i == j && period[i]) {
                g.add_edge(i, i, {-*period[i], ends[i].dimension(), true});
                g.add_edge(i, i, {*period[i], ends[i].dimension(), true});
            }
        }
    }
    return g;
}

} // namespace derhed
