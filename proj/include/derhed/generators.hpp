#pragma once

// Trusted instance generators. Every graph produced here is marked genuine.

#include <string>
#include <utility>
#include <vector>

#include "derhed/error.hpp"
#include "derhed/hereditary.hpp"
#include "derhed/homotopy.hpp"
#include "derhed/quiver.hpp"
#include "derhed/shift_graph.hpp"

namespace derhed {

/// Orbit id of the interval module on vertices a..b (1-based).
inline std::string interval_id(std::size_t a, std::size_t b) {
    return "M" + std::to_string(a) + "_" + std::to_string(b);
}

/// D^b of the path algebra of A_n with the given orientation word, from the
/// interval modules and their Hom / Ext^1 dimensions.
inline ShiftGraph gen_dynkin_an(std::size_t n, std::string_view orientation, PrimeField field = PrimeField{}) {
    if (n < 2 || n > 8) throw Error(ErrorKind::InvalidInput, "A_n generator needs 2 <= n <= 8");
    const auto forward = parse_orientation(orientation);
    const Quiver q = a_n_quiver(n, forward);

    AbelianData data;
    std::vector<Representation> modules;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            Representation m = interval_representation(q, a, b, field);
            // Interval modules are bricks; End = k certifies indecomposability.
            if (rep_hom_dim(q, m, m) != 1) {
                throw Error(ErrorKind::NotIndecomposable, "interval module " + interval_id(a + 1, b + 1));
            }
            data.ids.push_back(interval_id(a + 1, b + 1));
            modules.push_back(std::move(m));
        }
    }
    const std::size_t count = modules.size();
    data.hom.assign(count, std::vector<std::size_t>(count, 0));
    data.ext1.assign(count, std::vector<std::size_t>(count, 0));
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            data.hom[i][j] = rep_hom_dim(q, modules[i], modules[j]);
            data.ext1[i][j] = euler_ext1_dim(q, modules[i], modules[j]);
        }
    }
    std::string word;
    for (bool f : forward) word += f ? '>' : '<';
    data.name = "A" + std::to_string(n) + (word.empty() ? "" : ":" + word);
    ShiftGraph g = expand_hereditary(data);
    g.field_char = field.characteristic();
    return g;
}

/// The A_2 quiver 1 -> 2 with modules S1 = (1, 0), I = (1, 1), S2 = (0, 1),
/// and the semisimple subcategory add(S1 + S2 + I[1]) which covers every
/// orbit but has the nonzero map S2 -> (I[1])[-1].
inline std::pair<ShiftGraph, Heart> gen_a2(PrimeField field = PrimeField{}) {
    const Quiver q = a_n_quiver(2, {true});
    const std::vector<std::pair<std::string, Representation>> modules = {
        {"S1", interval_representation(q, 0, 0, field)},
        {"I", interval_representation(q, 0, 1, field)},
        {"S2", interval_representation(q, 1, 1, field)},
    };
    AbelianData data;
    data.name = "A2";
    for (const auto& [id, m] : modules) data.ids.push_back(id);
    data.hom.assign(3, std::vector<std::size_t>(3, 0));
    data.ext1.assign(3, std::vector<std::size_t>(3, 0));
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            data.hom[i][j] = rep_hom_dim(q, modules[i].second, modules[j].second);
            data.ext1[i][j] = euler_ext1_dim(q, modules[i].second, modules[j].second);
        }
    }
    ShiftGraph g = expand_hereditary(data);
    g.field_char = field.characteristic();

    Heart heart;
    heart.block = {g.orbit_index("S1"), g.orbit_index("I"), g.orbit_index("S2")};
    std::sort(heart.block.begin(), heart.block.end());
    heart.offsets = {{g.orbit_index("S1"), 0}, {g.orbit_index("S2"), 0}, {g.orbit_index("I"), 1}};
    return {std::move(g), std::move(heart)};
}

/// k[a]/(a^2): one vertex with a loop a and the relation a.a.
inline MonomialAlgebra dual_numbers(PrimeField field = PrimeField{}) {
    const Quiver q = Quiver::from_ids({"1"}, {{"a", "1", "1"}});
    return build_algebra(q, {{"a", "a"}}, field);
}

/// C_l = (R -a-> R -a-> ... -a-> R) with l terms in degrees -(l-1)..0.
inline ProjComplex dual_numbers_chain(const MonomialAlgebra& alg, std::size_t length) {
    std::map<int, std::vector<std::size_t>> comps;
    std::map<int, AlgMatrix> diffs;
    const int top = 0;
    const int bottom = -static_cast<int>(length) + 1;
    const std::size_t loop = alg.basis_index("a");
    for (int k = bottom; k <= top; ++k) comps[k] = {0};
    for (int k = bottom; k < top; ++k) {
        AlgMatrix d(alg, 1, 1);
        d.at(0, 0)[loop] = 1;
        diffs.emplace(k, std::move(d));
    }
    return ProjComplex(std::move(comps), std::move(diffs));
}

/// Perfect complexes C_1, ..., C_max_length over the dual numbers.
inline ShiftGraph gen_dual_numbers(std::size_t max_length, int window, PrimeField field = PrimeField{}) {
    if (max_length < 2) throw Error(ErrorKind::InvalidInput, "dual-numbers generator needs max_length >= 2");
    const MonomialAlgebra alg = dual_numbers(field);
    std::vector<NamedComplex> reps;
    for (std::size_t l = 1; l <= max_length; ++l) reps.push_back({"C" + std::to_string(l), dual_numbers_chain(alg, l)});
    return build_shiftgraph_from_complexes(alg, reps, window, "dual-numbers");
}

/// A single orbit with X = X[n] and End(X) a division ring of dimension end_dim.
inline ShiftGraph gen_semisimple_block(int period, std::size_t end_dim) {
    if (period < 1) throw Error(ErrorKind::InvalidInput, "period must be >= 1");
    if (end_dim < 1) throw Error(ErrorKind::InvalidInput, "end_dim must be >= 1");
    ShiftGraph g;
    g.name = "semisimple-p" + std::to_string(period);
    g.genuine = true;
    g.add_orbit({"X", period, end_dim});
    for (int w : {-period, 0, period}) g.add_edge(0, 0, {w, end_dim, true});
    return g;
}

/// D^b(k-mod): one simple object, End = k, no extensions.
inline ShiftGraph gen_point() {
    return expand_hereditary({"point", {"X"}, {{1}}, {{0}}});
}

} // namespace derhed
