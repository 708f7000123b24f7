#include <gtest/gtest.h>

#include <string>

#include "derhed/generators.hpp"
#include "support.hpp"

using namespace derhed;
using derhed::testing::all_orbits;
using derhed::testing::find_isomorphism;

namespace {

std::string word_from_mask(std::size_t n, unsigned mask) {
    std::string w;
    for (std::size_t i = 0; i + 1 < n; ++i) w += ((mask >> i) & 1u) ? '>' : '<';
    return w;
}

} // namespace

TEST(Generators, DynkinOrbitCounts) {
    EXPECT_EQ(gen_dynkin_an(2, ">").size(), 3u);
    EXPECT_EQ(gen_dynkin_an(3, ">>").size(), 6u);
    EXPECT_EQ(gen_dynkin_an(8, ">>>>>>>").size(), 36u);
    EXPECT_EQ(gen_dynkin_an(3, "→←").name, "A3:><");
    EXPECT_THROW(gen_dynkin_an(1, ""), Error);
    EXPECT_THROW(gen_dynkin_an(9, ">>>>>>>>"), Error);
    EXPECT_THROW(gen_dynkin_an(3, ">"), Error);
}

TEST(Generators, A2OrientationsAreIsomorphic) {
    EXPECT_TRUE(find_isomorphism(gen_dynkin_an(2, ">"), gen_dynkin_an(2, "<")).has_value());
}

TEST(Generators, ReversedOrientationIsIsomorphic) {
    EXPECT_TRUE(find_isomorphism(gen_dynkin_an(3, ">>"), gen_dynkin_an(3, "<<")).has_value());
    EXPECT_TRUE(find_isomorphism(gen_dynkin_an(4, "><>"), gen_dynkin_an(4, "<><")).has_value());
}

TEST(Generators, DynkinInstancesAreCleanAndHereditary) {
    for (std::size_t n = 2; n <= 5; ++n) {
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
            const ShiftGraph g = gen_dynkin_an(n, word_from_mask(n, mask));
            const ValidationReport v = validate(g);
            EXPECT_TRUE(v.errors.empty());
            EXPECT_TRUE(v.warnings.empty()) << g.name << ": " << (v.warnings.empty() ? "" : v.warnings.front());
            for (const auto& [pair, list] : g.homs()) {
                for (const HomEdge& e : list) {
                    EXPECT_TRUE(e.weight == 0 || e.weight == 1);
                    EXPECT_EQ(e.dim, 1u);
                }
            }
            const PathCalculus calc(g);
            ASSERT_EQ(calc.blocks().size(), 1u);
            EXPECT_EQ(check_hereditary(calc, calc.blocks().front()).verdict, Verdict::Hereditary);
        }
    }
}

TEST(Generators, NamedA2) {
    const auto [g, heart] = gen_a2();
    EXPECT_EQ(g.size(), 3u);
    EXPECT_EQ(PathCalculus(g).blocks().size(), 1u);
    EXPECT_FALSE(verify_heart(g, heart).ok());
    EXPECT_EQ(heart.offset(g.orbit_index("I")), 1);
    EXPECT_TRUE(find_isomorphism(g, gen_dynkin_an(2, ">")).has_value());
}

TEST(Generators, DualNumbers) {
    const ShiftGraph g = gen_dual_numbers(2, 3);
    EXPECT_TRUE(validate(g).ok());
    EXPECT_EQ(g.name, "dual-numbers");
    EXPECT_EQ(g.orbit(g.orbit_index("C1")).end_dim, 2u);
    EXPECT_EQ(g.orbit(g.orbit_index("C2")).end_dim, 2u);
    for (const Orbit& o : g.orbits()) EXPECT_FALSE(o.period.has_value());
    EXPECT_THROW(gen_dual_numbers(1, 3), Error);
    const PathCalculus calc(g);
    EXPECT_EQ(calc.blocks().size(), 1u);
}

TEST(Generators, DualNumbersWindowOnlyAddsEdges) {
    const ShiftGraph small = gen_dual_numbers(3, 2);
    const ShiftGraph large = gen_dual_numbers(3, 4);
    for (const auto& [pair, list] : small.homs()) {
        for (const HomEdge& e : list) {
            const auto& bigger = large.edges(pair.first, pair.second);
            EXPECT_NE(std::find(bigger.begin(), bigger.end(), e), bigger.end());
        }
    }
}

TEST(Generators, SemisimpleBlocks) {
    for (int p = 1; p <= 4; ++p) {
        const ShiftGraph g = gen_semisimple_block(p, 3);
        EXPECT_TRUE(validate(g).ok());
        EXPECT_EQ(blocks(g).size(), 1u);
        EXPECT_EQ(classify_degenerate(g, {0}), (Degeneracy{Degeneracy::Kind::DegeneratePeriodic, p, 3}));
    }
    EXPECT_THROW(gen_semisimple_block(0, 1), Error);
    EXPECT_THROW(gen_semisimple_block(1, 0), Error);
}

TEST(Generators, CrossEngineA2) {
    auto res = derhed::testing::a2_resolutions();
    const ShiftGraph from_complexes = build_shiftgraph_from_complexes(res.alg, res.complexes, 2, "A2");
    const ShiftGraph abelian = gen_dynkin_an(2, ">");
    const auto iso = find_isomorphism(abelian, from_complexes);
    ASSERT_TRUE(iso.has_value());
    // the bijection is the expected one on names
    for (std::size_t x = 0; x < abelian.size(); ++x) {
        const std::string& id = abelian.orbit(x).id;
        const std::string expected = id == "M1_1" ? "S1" : id == "M1_2" ? "I" : "S2";
        EXPECT_EQ(from_complexes.orbit((*iso)[x]).id, expected);
    }
    EXPECT_TRUE(from_complexes.windowed);
    const PathCalculus calc(from_complexes);
    EXPECT_EQ(check_hereditary(calc, all_orbits(from_complexes)).verdict, Verdict::HereditaryWithinWindow);
}
