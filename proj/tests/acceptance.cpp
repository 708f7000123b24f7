// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "derhed/cli.hpp"
#include "derhed/derhed.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace derhed;
using derhed::testing::all_orbits;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        if (pass) detail = what;
        pass = false;
    }
};

std::string word_from_mask(std::size_t n, unsigned mask) {
    std::string w;
    for (std::size_t i = 0; i + 1 < n; ++i) w += ((mask >> i) & 1u) ? '>' : '<';
    return w;
}

std::vector<ShiftGraph> dynkin_family() {
    std::vector<ShiftGraph> out;
    for (std::size_t n = 2; n <= 6; ++n) {
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) out.push_back(gen_dynkin_an(n, word_from_mask(n, mask)));
    }
    return out;
}

std::vector<ShiftGraph> genuine_instances(bool with_degenerate) {
    std::vector<ShiftGraph> out = dynkin_family();
    out.push_back(gen_a2().first);
    out.push_back(gen_dual_numbers(3, 3));
    if (with_degenerate) {
        for (int p = 1; p <= 4; ++p) out.push_back(gen_semisimple_block(p, 2));
        out.push_back(gen_point());
    }
    return out;
}

Json cli_json(std::vector<std::string> args, int& code) {
    std::ostringstream out;
    code = cli::run(std::move(args), out);
    return Json::parse(out.str());
}

// Hom-only closed walk of total weight 1 with at most 3 steps, by enumeration.
bool unit_hom_cycle(const ShiftGraph& g, std::size_t x) {
    std::function<bool(std::size_t, std::int64_t, int)> go = [&](std::size_t at, std::int64_t w, int left) {
        if (left == 0) return false;
        for (std::size_t y = 0; y < g.size(); ++y) {
            for (const HomEdge& e : g.edges(at, y)) {
                if (y == x && w + e.weight == 1) return true;
                if (go(y, w + e.weight, left - 1)) return true;
            }
        }
        return false;
    };
    return go(x, 0, 3);
}

Outcome a2_golden() {
    Outcome r;
    const std::string dir = std::filesystem::temp_directory_path() / "derhed-acceptance";
    std::filesystem::create_directories(dir);
    int code = 0;
    cli_json({"gen", "a2", "--out", dir + "/a2.json", "--heart-out", dir + "/heart.json"}, code);
    r.require(code == 0, "gen a2 failed");
    const Json check = cli_json({"check", dir + "/a2.json"}, code);
    r.require(code == 0 && check["verdict"] == "hereditary", "verdict is not hereditary");
    const Json& block = check["blocks"][0];
    r.require(block["heart_source"] == "S2", "heart source is not S2");
    r.require(block["heart"]["offsets"] == Json::parse(R"({"S1": 0, "I": 0, "S2": 0})"), "wrong heart offsets");
    const Json verify = cli_json({"verify-heart", dir + "/a2.json", "--heart", dir + "/heart.json"}, code);
    const Json& v = verify["check"]["violations"];
    r.require(v.size() == 1, "expected exactly one violation");
    if (v.size() == 1) {
        r.require(v[0]["from"] == "S2@0" && v[0]["to"] == "I@1" && v[0]["m"] == -1, "wrong violation " + v[0].dump());
    }
    std::filesystem::remove_all(dir);
    return r;
}

Outcome dynkin() {
    Outcome r;
    for (const ShiftGraph& g : dynkin_family()) {
        const std::size_t n = g.name.size() >= 2 ? static_cast<std::size_t>(g.name[1] - '0') : 0;
        r.require(g.size() == n * (n + 1) / 2, g.name + ": orbit count");
        const ValidationReport v = validate(g);
        r.require(v.errors.empty() && v.warnings.empty(), g.name + ": validation");
        const PathCalculus calc(g);
        r.require(calc.blocks().size() == 1, g.name + ": not one block");
        const HereditaryReport h = check_hereditary(calc, calc.blocks().front());
        r.require(h.verdict == Verdict::Hereditary, g.name + ": verdict");
        for (std::size_t x = 0; x < g.size(); ++x) {
            const HeartCheck c = verify_heart(g, extract_heart(calc, all_orbits(g), x));
            r.require(c.ok() && c.degrees_hereditary(), g.name + ": heart degrees from " + g.orbit(x).id);
        }
    }
    return r;
}

Outcome dual_numbers_block() {
    Outcome r;
    const MonomialAlgebra small = dual_numbers(PrimeField(3));
    const ProjComplex c2_small = dual_numbers_chain(small, 2);
    const std::size_t oracle = oracles::brute_dual_hom(2, 2, -1);
    r.require(oracle == 1, "oracle disagrees with the expected value");
    r.require(hom_k_dim(small, c2_small, c2_small, -1) == oracle, "engine disagrees with the oracle over F_3");
    const MonomialAlgebra alg = dual_numbers();
    const ProjComplex c2 = dual_numbers_chain(alg, 2);
    r.require(hom_k_dim(alg, c2, c2, -1) == 1, "regression value over the default field");

    const ShiftGraph g = gen_dual_numbers(3, 3);
    const PathCalculus calc(g);
    const HereditaryReport h = check_hereditary(calc, calc.blocks().front());
    r.require(h.verdict == Verdict::NotHereditary, "verdict is not not-hereditary");
    r.require(h.witness && h.witness->exists, "no witness");
    if (h.witness && !h.witness->witness.empty()) {
        const auto& walk = h.witness->witness;
        r.require(walk.back().at.offset - walk.front().at.offset == -1, "witness total weight is not -1");
        for (std::size_t i = 1; i < walk.size(); ++i) {
            const ObjRef a = walk[i - 1].at;
            const ObjRef b = walk[i].at;
            bool legal = false;
            if (walk[i].kind == StepKind::Shift) {
                legal = a.orbit == b.orbit && b.offset == a.offset + 1;
            } else {
                for (const HomEdge& e : g.edges(a.orbit, b.orbit)) legal = legal || e.weight == b.offset - a.offset;
            }
            r.require(legal, "illegal witness step");
        }
    }
    r.require(calc.directing_objects().empty(), "directing objects present");
    return r;
}

Outcome homogeneity() {
    Outcome r;
    for (const ShiftGraph& g : genuine_instances(true)) {
        const PathCalculus calc(g);
        for (const auto& block : calc.blocks()) {
            std::size_t negative = 0;
            for (std::size_t x : block) negative += calc.min_weight(x, x).is_neg_inf() ? 1 : 0;
            r.require(negative == 0 || negative == block.size(), g.name + ": mixed indicator");
        }
    }
    return r;
}

Outcome finiteness() {
    Outcome r;
    for (const ShiftGraph& g : genuine_instances(true)) {
        const PathCalculus calc(g);
        for (const auto& block : calc.blocks()) {
            for (std::size_t x : block) {
                for (std::size_t y : block) {
                    r.require(!calc.min_weight(x, y).is_pos_inf(), g.name + ": infinite distance");
                    r.require(calc.min_weight(x, y).is_pos_inf() == calc.min_weight(y, x).is_pos_inf(),
                              g.name + ": asymmetric finiteness");
                }
            }
        }
    }
    return r;
}

Outcome unit_cycles() {
    Outcome r;
    for (const ShiftGraph& g : genuine_instances(false)) {
        for (const auto& block : blocks(g)) {
            if (classify_degenerate(g, block).kind != Degeneracy::Kind::NonDegenerate) continue;
            for (std::size_t x : block) r.require(unit_hom_cycle(g, x), g.name + ": no unit cycle at " + g.orbit(x).id);
        }
    }
    return r;
}

Outcome walk_oracle() {
    Outcome r;
    std::mt19937 rng(500500);
    std::size_t neg = 0;
    std::size_t pos = 0;
    for (int trial = 0; trial < 520; ++trial) {
        const ShiftGraph g = oracles::random_graph(rng, 6, 3);
        const PathCalculus calc(g);
        const auto expected = oracles::oracle_min_weights(g);
        for (std::size_t x = 0; x < g.size(); ++x) {
            for (std::size_t y = 0; y < g.size(); ++y) {
                r.require(calc.min_weight(x, y) == expected[x][y], "mismatch on trial " + std::to_string(trial));
                neg += expected[x][y].is_neg_inf() ? 1 : 0;
                pos += expected[x][y].is_pos_inf() ? 1 : 0;
            }
        }
    }
    r.require(neg > 0 && pos > 0, "infinite cases not exercised");
    return r;
}

Outcome truncations() {
    Outcome r;
    const ShiftGraph g = gen_dynkin_an(3, ">>");
    const PathCalculus calc(g);
    const Heart h = check_hereditary(calc, all_orbits(g)).heart.value();
    std::mt19937 rng(100);
    for (int trial = 0; trial < 100; ++trial) {
        FormalObject obj;
        const std::size_t parts = 1 + rng() % 6;
        for (std::size_t k = 0; k < parts; ++k) obj.add({rng() % g.size(), static_cast<std::int64_t>(rng() % 9) - 4});
        const auto coh = cohomology(g, h, obj);
        for (std::int64_t n = -2; n <= 2; ++n) {
            const FormalObject low = truncate(g, h, obj, n, TruncationSide::AtMost);
            const FormalObject high = truncate(g, h, obj, n + 1, TruncationSide::AtLeast);
            FormalObject joined = low;
            joined.merge(high);
            r.require(joined == obj, "truncations do not reassemble");
            for (const auto& [p, part] : cohomology(g, h, low)) r.require(p <= n, "low truncation has high degree");
            for (const auto& [p, part] : cohomology(g, h, high)) r.require(p > n, "high truncation has low degree");
            for (const auto& [p, part] : coh) {
                const auto& side = cohomology(g, h, p <= n ? low : high);
                r.require(side.count(p) && side.at(p) == part, "cohomology moved across the cut");
            }
        }
    }
    return r;
}

Outcome cross_engine() {
    Outcome r;
    const auto res = derhed::testing::a2_resolutions();
    const ShiftGraph from_complexes = build_shiftgraph_from_complexes(res.alg, res.complexes, 2, "A2");
    const ShiftGraph abelian = gen_dynkin_an(2, ">");
    r.require(derhed::testing::find_isomorphism(abelian, from_complexes).has_value(), "graphs are not isomorphic");
    r.require(derhed::testing::find_isomorphism(gen_a2().first, from_complexes).has_value(),
              "named A2 instance is not isomorphic");
    return r;
}

Outcome degenerate() {
    Outcome r;
    for (int p = 1; p <= 6; ++p) {
        for (std::size_t d = 1; d <= 3; ++d) {
            const ShiftGraph g = gen_semisimple_block(p, d);
            const std::string tag = "semisimple(" + std::to_string(p) + ", " + std::to_string(d) + ")";
            r.require(classify_degenerate(g, {0}) == Degeneracy{Degeneracy::Kind::DegeneratePeriodic, p, d},
                      tag + ": classification");
            const PathCalculus calc(g);
            r.require(check_hereditary(calc, {0}).verdict == Verdict::NotHereditary, tag + ": verdict");
        }
    }
    const ShiftGraph point = gen_point();
    r.require(classify_degenerate(point, {0}).kind == Degeneracy::Kind::DegenerateAperiodic, "point: classification");
    const PathCalculus calc(point);
    const HereditaryReport h = check_hereditary(calc, {0});
    r.require(h.verdict == Verdict::Hereditary, "point: verdict");
    r.require(h.heart && h.heart->offsets == std::map<std::size_t, std::int64_t>{{0, 0}}, "point: heart");
    return r;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
        {"A2 golden heart and one-violation heart", a2_golden},
        {"Dynkin A2..A6 all orientations", dynkin},
        {"dual numbers hom, witness, directing", dual_numbers_block},
        {"negative-walk indicator constant on blocks", homogeneity},
        {"finite and symmetric distances on blocks", finiteness},
        {"unit hom cycles on non-degenerate blocks", unit_cycles},
        {"min_weight vs walk enumeration, 520 graphs", walk_oracle},
        {"truncation partition over A3", truncations},
        {"cross-engine A2 isomorphism", cross_engine},
        {"degenerate classification", degenerate},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s %2d %s%s%s\n", o.pass ? "PASS" : "FAIL", index, name, o.pass ? "" : ": ", o.detail.c_str());
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
