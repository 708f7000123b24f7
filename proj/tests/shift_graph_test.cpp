#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>

#include "derhed/generators.hpp"
#include "derhed/json_io.hpp"
#include "derhed/shift_graph.hpp"

using namespace derhed;

namespace {

bool mentions(const std::vector<std::string>& messages, const std::string& needle) {
    return std::any_of(messages.begin(), messages.end(),
                       [&](const std::string& m) { return m.find(needle) != std::string::npos; });
}

ShiftGraph two_orbits() {
    ShiftGraph g;
    g.name = "two";
    g.add_orbit({"X", std::nullopt, 1});
    g.add_orbit({"Y", std::nullopt, 1});
    g.add_edge("X", "X", {0, 1, true});
    g.add_edge("Y", "Y", {0, 1, true});
    return g;
}

} // namespace

TEST(ShiftGraph, EdgesStaySortedByWeight) {
    ShiftGraph g = two_orbits();
    g.add_edge("X", "Y", {2, 1, false});
    g.add_edge("X", "Y", {-1, 3, false});
    g.add_edge("X", "Y", {0, 1, false});
    const auto& list = g.edges(0, 1);
    ASSERT_EQ(list.size(), 3u);
    EXPECT_EQ(list[0].weight, -1);
    EXPECT_EQ(list[1].weight, 0);
    EXPECT_EQ(list[2].weight, 2);
    EXPECT_EQ(g.edge_count(), 5u);
}

TEST(ShiftGraph, UnknownAndDuplicateOrbits) {
    ShiftGraph g = two_orbits();
    try {
        g.orbit_index("Z");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnknownOrbit);
    }
    EXPECT_THROW(g.add_orbit({"X", std::nullopt, 1}), Error);
}

TEST(Validate, AcceptsGeneratedInstances) {
    EXPECT_TRUE(validate(gen_a2().first).ok());
    EXPECT_TRUE(validate(gen_point()).ok());
    EXPECT_TRUE(validate(gen_semisimple_block(3, 2)).ok());
    EXPECT_TRUE(validate(gen_dual_numbers(3, 3)).ok());
}

TEST(Validate, MissingIdentity) {
    ShiftGraph g;
    g.add_orbit({"X", std::nullopt, 1});
    const auto r = validate(g);
    EXPECT_FALSE(r.ok());
    EXPECT_TRUE(mentions(r.errors, "missing identity"));
}

TEST(Validate, PeriodicityClosure) {
    ShiftGraph g;
    g.add_orbit({"X", 2, 1});
    g.add_edge("X", "X", {0, 1, true});
    g.add_edge("X", "X", {2, 1, true});
    const auto r = validate(g);
    EXPECT_TRUE(mentions(r.errors, "periodicity closure"));
    EXPECT_TRUE(mentions(r.errors, "(X, X, -2)"));
}

TEST(Validate, DuplicateWeightAndZeroDimension) {
    ShiftGraph g = two_orbits();
    g.add_edge("X", "Y", {1, 1, false});
    g.add_edge("X", "Y", {1, 2, false});
    g.add_edge("Y", "X", {0, 0, false});
    const auto r = validate(g);
    EXPECT_TRUE(mentions(r.errors, "duplicate weight: (X, Y, 1)"));
    EXPECT_TRUE(mentions(r.errors, "zero dimension: (Y, X, 0)"));
}

TEST(Validate, AllIsoOnlyOnAlignedSelfEdges) {
    ShiftGraph g = two_orbits();
    g.add_edge("X", "Y", {0, 1, true});
    g.add_edge("X", "X", {3, 1, true});
    const auto r = validate(g);
    EXPECT_TRUE(mentions(r.errors, "cross-orbit"));
    EXPECT_TRUE(mentions(r.errors, "non-multiple"));
}

TEST(Validate, ConeClosureWarningsOnlyForGenuine) {
    ShiftGraph g = two_orbits();
    g.add_edge("X", "Y", {0, 1, false});
    EXPECT_TRUE(validate(g).warnings.empty());
    g.genuine = true;
    const auto r = validate(g);
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(mentions(r.warnings, "cone closure"));
}

TEST(Validate, IdentityDimensionMismatchWarns) {
    ShiftGraph g;
    g.add_orbit({"X", std::nullopt, 2});
    g.add_edge("X", "X", {0, 1, false});
    const auto r = validate(g);
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(mentions(r.warnings, "identity edge dim"));
}

TEST(ExpandHereditary, A2Edges) {
    AbelianData data{"A2", {"S1", "I", "S2"}, {{1, 0, 0}, {1, 1, 0}, {0, 1, 1}}, {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}};
    const ShiftGraph g = expand_hereditary(data);
    EXPECT_EQ(g.size(), 3u);
    EXPECT_EQ(g.edge_count(), 6u);
    EXPECT_EQ(g.edges(g.orbit_index("S1"), g.orbit_index("S2")), (std::vector<HomEdge>{{1, 1, false}}));
    EXPECT_EQ(g.edges(g.orbit_index("S2"), g.orbit_index("I")), (std::vector<HomEdge>{{0, 1, false}}));
    EXPECT_EQ(g.edges(g.orbit_index("I"), g.orbit_index("S1")), (std::vector<HomEdge>{{0, 1, false}}));
    EXPECT_EQ(g.edges(0, 0), (std::vector<HomEdge>{{0, 1, true}}));
    EXPECT_TRUE(g.genuine);
    EXPECT_FALSE(g.windowed);
    EXPECT_EQ(g, gen_a2().first);
}

TEST(ExpandHereditary, RejectsBadTables) {
    EXPECT_THROW(expand_hereditary({"bad", {"X"}, {{0}}, {{0}}}), Error);
    EXPECT_THROW(expand_hereditary({"bad", {"X", "Y"}, {{1}}, {{0}}}), Error);
}

TEST(ObjRefs, PeriodicOffsetsAreReduced) {
    const ShiftGraph g = gen_semisimple_block(3, 1);
    EXPECT_EQ(normalized(g, {0, 7}).offset, 1);
    EXPECT_EQ(normalized(g, {0, -1}).offset, 2);
    const ShiftGraph a2 = gen_a2().first;
    EXPECT_EQ(normalized(a2, {0, -5}).offset, -5);
}

TEST(FormalObjects, MultisetSemantics) {
    FormalObject x{{1, 0}, {0, 2}, {1, 0}};
    EXPECT_EQ(x.size(), 3u);
    EXPECT_EQ(x.parts().front(), (ObjRef{0, 2}));
    FormalObject y;
    y.add({1, 0});
    y.add({0, 2});
    y.add({1, 0});
    EXPECT_EQ(x, y);
    const ShiftGraph g = gen_semisimple_block(2, 1);
    EXPECT_EQ(FormalObject({{0, 5}}).normalized_in(g), FormalObject({{0, 1}}));
}

TEST(Json, RoundTripIsExact) {
    for (const ShiftGraph& g :
         {gen_a2().first, gen_dual_numbers(3, 2), gen_semisimple_block(2, 3), gen_dynkin_an(4, "><>")}) {
        const Json j = to_json(g);
        const ShiftGraph back = shift_graph_from_json(j);
        EXPECT_EQ(back, g);
        EXPECT_EQ(to_json(back).dump(), j.dump());
        EXPECT_EQ(to_json(shift_graph_from_json(Json::parse(j.dump(2)))).dump(2), j.dump(2));
    }
}

TEST(Json, RandomGraphsRoundTrip) {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        ShiftGraph g;
        g.name = "random-" + std::to_string(trial);
        g.field_char = trial % 2 == 0 ? 32003 : 3;
        g.genuine = trial % 3 == 0;
        g.windowed = trial % 5 == 0;
        const std::size_t n = 1 + rng() % 5;
        for (std::size_t i = 0; i < n; ++i) {
            std::optional<int> period;
            if (rng() % 4 == 0) period = 1 + static_cast<int>(rng() % 3);
            g.add_orbit({"O" + std::to_string(i), period, 1 + rng() % 3});
        }
        for (int e = 0; e < 8; ++e) {
            g.add_edge(rng() % n, rng() % n, {static_cast<int>(rng() % 7) - 3, 1 + rng() % 2, rng() % 2 == 0});
        }
        EXPECT_EQ(shift_graph_from_json(to_json(g)), g);
    }
}

TEST(Json, SchemaViolations) {
    const Json good = to_json(gen_a2().first);
    auto expect_kind = [](const Json& j, ErrorKind kind) {
        try {
            shift_graph_from_json(j);
            FAIL() << j.dump();
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), kind) << e.what();
        }
    };
    Json j = good;
    j.erase("orbits");
    expect_kind(j, ErrorKind::InvalidInput);
    j = good;
    j["field_char"] = 9;
    expect_kind(j, ErrorKind::InvalidField);
    j = good;
    j["homs"][0]["to"] = "nowhere";
    expect_kind(j, ErrorKind::UnknownOrbit);
    j = good;
    j["orbits"][0]["period"] = 0;
    expect_kind(j, ErrorKind::InvalidInput);
    j = good;
    j["homs"][0]["edges"][0]["dim"] = "one";
    expect_kind(j, ErrorKind::InvalidInput);
    j = good;
    j["orbits"].push_back(j["orbits"][0]);
    expect_kind(j, ErrorKind::InvalidInput);
}

TEST(Json, ObjectReferences) {
    const ShiftGraph g = gen_a2().first;
    EXPECT_EQ(parse_obj_ref(g, "S1@-3"), (ObjRef{g.orbit_index("S1"), -3}));
    EXPECT_EQ(parse_obj_ref(g, "I"), (ObjRef{g.orbit_index("I"), 0}));
    EXPECT_EQ(format_obj_ref(g, {g.orbit_index("S2"), 4}), "S2@4");
    EXPECT_THROW(parse_obj_ref(g, "S1@x"), Error);
    EXPECT_THROW(parse_obj_ref(g, "Q@1"), Error);
}

TEST(Json, ComplexRoundTrip) {
    const MonomialAlgebra alg = dual_numbers();
    const ProjComplex c = dual_numbers_chain(alg, 3);
    const ProjComplex back = complex_from_json(alg, to_json(alg, c));
    EXPECT_EQ(back.components(), c.components());
    EXPECT_EQ(back.differentials(), c.differentials());

    const Json alg_json = Json::parse(R"({"vertices": ["1"], "arrows": [{"id": "a", "from": "1", "to": "1"}],
                                          "relations": [["a", "a"]]})");
    EXPECT_EQ(algebra_from_json(alg_json).dimension(), 2u);
    const Json single = Json::parse(R"({"degrees": {"-1": ["1"], "0": ["1"]}, "differentials": {"-1": [[["a", 1]]]}})");
    EXPECT_EQ(complex_from_json(alg, single).differentials(), dual_numbers_chain(alg, 2).differentials());
}
