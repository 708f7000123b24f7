#pragma once

// Helpers shared by the test binaries.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "derhed/homotopy.hpp"
#include "derhed/quiver.hpp"
#include "derhed/shift_graph.hpp"

namespace derhed::testing {

/// Orbit bijection (by brute force over permutations) carrying every edge
/// list, period and end_dim of `a` onto those of `b`.
inline std::optional<std::vector<std::size_t>> find_isomorphism(const ShiftGraph& a, const ShiftGraph& b) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
    std::vector<std::size_t> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t x = 0; x < a.size() && ok; ++x) {
            ok = a.orbit(x).period == b.orbit(perm[x]).period && a.orbit(x).end_dim == b.orbit(perm[x]).end_dim;
        }
        for (std::size_t x = 0; x < a.size() && ok; ++x) {
            for (std::size_t y = 0; y < a.size() && ok; ++y) ok = a.edges(x, y) == b.edges(perm[x], perm[y]);
        }
        if (ok) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

/// The A_2 path algebra 1 -> 2 and projective resolutions of its three
/// indecomposables: S2 = P2, I = P1 and S1 = (P2 -a1-> P1).
struct A2Resolutions {
    MonomialAlgebra alg;
    std::vector<NamedComplex> complexes;
};

inline A2Resolutions a2_resolutions(PrimeField field = PrimeField{}) {
    MonomialAlgebra alg = build_algebra(a_n_quiver(2, {true}), {}, field);
    AlgMatrix d(alg, 1, 1);
    d.at(0, 0)[alg.basis_index("a1")] = 1;
    std::vector<NamedComplex> complexes = {
        {"S1", ProjComplex({{-1, {1}}, {0, {0}}}, {{-1, d}})},
        {"I", ProjComplex::stalk({0})},
        {"S2", ProjComplex::stalk({1})},
    };
    return {std::move(alg), std::move(complexes)};
}

inline std::vector<std::size_t> all_orbits(const ShiftGraph& g) {
    std::vector<std::size_t> out(g.size());
    std::iota(out.begin(), out.end(), 0);
    return out;
}

} // namespace derhed::testing
