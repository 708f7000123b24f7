#pragma once

// The derhed command-line front end. run() takes argv without the program
// name, writes one report to `out`, and returns the process exit code.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "derhed/error.hpp"
#include "derhed/generators.hpp"
#include "derhed/hereditary.hpp"
#include "derhed/homotopy.hpp"
#include "derhed/json_io.hpp"
#include "derhed/paths.hpp"
#include "derhed/shift_graph.hpp"
#include "derhed/version.hpp"

namespace derhed::cli {

enum Exit : int { Success = 0, AssertionFailed = 1, InputError = 2 };

namespace detail {

inline Json weight_json(const Weight& w) {
    if (w.is_finite()) return w.value();
    return w.to_string();
}

inline Json ids_json(const ShiftGraph& g, const std::vector<std::size_t>& orbits) {
    Json out = Json::array();
    for (std::size_t x : by_id(g, orbits)) out.push_back(g.orbit(x).id);
    return out;
}

inline Json walk_json(const ShiftGraph& g, const PathReport& r) {
    Json j;
    j["exists"] = r.exists;
    j["min_weight"] = weight_json(r.min_weight);
    j["walk"] = Json::array();
    for (const WalkStep& s : r.witness) {
        j["walk"].push_back({{"at", format_obj_ref(g, s.at)}, {"step", std::string(to_string(s.kind))}});
    }
    if (!r.witness.empty()) j["total_weight"] = r.witness.back().at.offset - r.witness.front().at.offset;
    return j;
}

inline Json degeneracy_json(const Degeneracy& d) {
    Json j;
    j["kind"] = std::string(to_string(d.kind));
    if (d.kind == Degeneracy::Kind::NonDegenerate) return j;
    j["period"] = d.period ? Json(*d.period) : Json(nullptr);
    j["end_dim"] = d.end_dim;
    return j;
}

inline Json heart_check_json(const ShiftGraph& g, const HeartCheck& check) {
    Json j;
    j["ok"] = check.ok();
    j["violations"] = Json::array();
    for (const HeartDegree& v : check.violations) {
        j["violations"].push_back(
            {{"from", format_obj_ref(g, v.from)}, {"to", format_obj_ref(g, v.to)}, {"m", v.m}});
    }
    j["degrees"] = Json::object();
    for (const auto& [m, count] : check.degrees) j["degrees"][std::to_string(m)] = count;
    j["degrees_in_0_1"] = check.degrees_hereditary();
    return j;
}

inline Json report_header(const std::string& command, const ShiftGraph* g) {
    Json j;
    j["command"] = command;
    j["version"] = std::string(version);
    if (g != nullptr) {
        j["instance"] = {{"name", g->name}, {"genuine", g->genuine}, {"windowed", g->windowed}};
    } else {
        j["instance"] = nullptr;
    }
    return j;
}

inline void render_text(std::ostream& out, const Json& j, int indent, const std::string& key) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string label = key.empty() ? "" : key + ":";
    const bool scalar_list = j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& v) { return v.is_primitive(); });
    if (j.is_primitive() || scalar_list || j.empty()) {
        std::string text;
        if (j.is_string()) {
            text = j.get<std::string>();
        } else if (scalar_list) {
            for (const Json& v : j) text += (text.empty() ? "" : ", ") + (v.is_string() ? v.get<std::string>() : v.dump());
            text = "[" + text + "]";
        } else {
            text = j.dump();
        }
        out << pad << label << (label.empty() ? "" : " ") << text << '\n';
        return;
    }
    if (!label.empty()) out << pad << label << '\n';
    const int inner = key.empty() ? indent : indent + 1;
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) render_text(out, v, inner, k);
    } else {
        std::size_t i = 0;
        for (const Json& v : j) render_text(out, v, inner, "[" + std::to_string(i++) + "]");
    }
}

inline void emit(std::ostream& out, const Json& report, bool pretty) {
    if (pretty) {
        render_text(out, report, 0, "");
    } else {
        out << report.dump() << '\n';
    }
}

inline ShiftGraph load_instance(const std::string& path, bool require_valid, Json* warnings = nullptr) {
    ShiftGraph g = shift_graph_from_json(read_json_file(path));
    if (!require_valid) return g;
    const ValidationReport v = validate(g);
    if (!v.ok()) {
        std::string msg = "instance fails validation:";
        for (const auto& e : v.errors) msg += " " + e + ";";
        msg.pop_back();
        throw Error(ErrorKind::InvalidGraph, msg);
    }
    if (warnings != nullptr) *warnings = v.warnings;
    return g;
}

inline void write_file(const std::string& path, const Json& j) {
    std::ofstream f(path);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot write '" + path + "'");
    f << j.dump(2) << '\n';
}

inline Json block_report(const PathCalculus& calc, const std::vector<std::size_t>& block) {
    const ShiftGraph& g = calc.graph();
    const HereditaryReport r = check_hereditary(calc, block);
    Json j;
    j["orbits"] = ids_json(g, r.block);
    j["classification"] = degeneracy_json(classify_degenerate(g, r.block));
    j["verdict"] = std::string(to_string(r.verdict));
    j["negative_walk"] = Json::object();
    for (std::size_t x : by_id(g, r.block)) j["negative_walk"][g.orbit(x).id] = r.negative.at(x);
    j["indicator_constant"] = r.indicator_constant();
    if (r.witness) {
        j["witness_orbit"] = g.orbit(*r.witness_orbit).id;
        j["witness"] = walk_json(g, *r.witness);
    }
    if (r.heart) {
        j["heart_source"] = g.orbit(*r.heart_source).id;
        j["heart"] = to_json(g, *r.heart);
        j["heart_check"] = heart_check_json(g, *r.heart_check);
    }
    return j;
}

} // namespace detail

struct Options {
    bool pretty = false;
    std::string file;
    bool assert_hereditary = false;
    unsigned jobs = 1;
    std::string from;
    std::string to;
    std::string heart_file;
    std::string out_file;
    std::string heart_out;
    std::size_t n = 2;
    std::string orientation;
    std::size_t max_length = 2;
    int window = 3;
    int period = 1;
    std::size_t end_dim = 1;
    std::string x_file;
    std::string y_file;
    int shift = 0;
};

inline int run(std::vector<std::string> args, std::ostream& out) {
    using namespace detail;
    Options o;
    CLI::App app{"Hereditary tests for triangulated categories given by shift-graphs", "derhed"};
    app.set_version_flag("--version", std::string(version));
    app.require_subcommand(1, 1);
    app.add_flag("--pretty", o.pretty, "Text report instead of JSON");

    auto* validate_cmd = app.add_subcommand("validate", "Check an instance for consistency");
    auto* blocks_cmd = app.add_subcommand("blocks", "List the blocks of an instance");
    auto* check_cmd = app.add_subcommand("check", "Decide heredity of every block");
    auto* heart_cmd = app.add_subcommand("heart", "Extract a heart from a source orbit");
    auto* verify_cmd = app.add_subcommand("verify-heart", "Verify a heart file");
    auto* dist_cmd = app.add_subcommand("dist", "Minimal walk weight between two orbits");
    auto* path_cmd = app.add_subcommand("path", "Path between two objects with a witness walk");
    auto* classify_cmd = app.add_subcommand("classify", "Classify degenerate blocks");
    auto* directing_cmd = app.add_subcommand("directing", "List directing objects");
    auto* gen_cmd = app.add_subcommand("gen", "Write a generated instance");
    auto* hom_cmd = app.add_subcommand("hom", "Hom dimension between perfect complexes");

    for (auto* c : {validate_cmd, blocks_cmd, check_cmd, heart_cmd, verify_cmd, dist_cmd, path_cmd, classify_cmd,
                    directing_cmd}) {
        c->add_option("FILE", o.file, "Instance JSON")->required();
        c->add_flag("--pretty", o.pretty, "Text report instead of JSON");
    }
    check_cmd->add_flag("--assert-hereditary", o.assert_hereditary, "Exit 1 unless every block is hereditary");
    check_cmd->add_option("--jobs", o.jobs, "Worker threads for the distance table")->check(CLI::PositiveNumber);
    heart_cmd->add_option("--from", o.from, "Source orbit")->required();
    verify_cmd->add_option("--heart", o.heart_file, "Heart JSON")->required();
    dist_cmd->add_option("FROM", o.from)->required();
    dist_cmd->add_option("TO", o.to)->required();
    path_cmd->add_option("FROM", o.from, "ORBIT@OFFSET")->required();
    path_cmd->add_option("TO", o.to, "ORBIT@OFFSET")->required();

    gen_cmd->require_subcommand(1, 1);
    gen_cmd->add_flag("--pretty", o.pretty, "Text report instead of JSON");
    auto* gen_an = gen_cmd->add_subcommand("an", "Path algebra of A_n");
    auto* gen_a2 = gen_cmd->add_subcommand("a2", "A_2 with the failing heart add(S1 + S2 + I[1])");
    auto* gen_dual = gen_cmd->add_subcommand("dual", "Perfect complexes over the dual numbers");
    auto* gen_semi = gen_cmd->add_subcommand("semisimple", "One periodic orbit with invertible morphisms");
    auto* gen_point = gen_cmd->add_subcommand("point", "D^b of the ground field");
    gen_an->add_option("--n", o.n)->required();
    gen_an->add_option("--orientation", o.orientation, "Word over > and <, length n-1");
    gen_a2->add_option("--heart-out", o.heart_out, "Also write the failing heart");
    gen_dual->add_option("--max-length", o.max_length)->required();
    gen_dual->add_option("--window", o.window)->required();
    gen_semi->add_option("--period", o.period)->required();
    gen_semi->add_option("--end-dim", o.end_dim)->required();
    for (auto* c : {gen_an, gen_a2, gen_dual, gen_semi, gen_point}) {
        c->add_option("--out", o.out_file, "Output instance JSON")->required();
        c->add_flag("--pretty", o.pretty, "Text report instead of JSON");
    }

    hom_cmd->add_option("ALGFILE", o.file, "Algebra JSON")->required();
    hom_cmd->add_option("X", o.x_file, "Complex JSON")->required();
    hom_cmd->add_option("Y", o.y_file, "Complex JSON")->required();
    hom_cmd->add_option("--shift", o.shift, "Degree n of Hom(X, Y[n])")->required();
    hom_cmd->add_flag("--pretty", o.pretty, "Text report instead of JSON");

    auto fail = [&](std::string_view kind, const std::string& message) {
        Json j;
        j["error"] = {{"kind", std::string(kind)}, {"message", message}};
        emit(out, j, o.pretty);
        return static_cast<int>(InputError);
    };

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Success;
    } catch (const CLI::CallForVersion&) {
        out << version << '\n';
        return Success;
    } catch (const CLI::ParseError& e) {
        return fail("InvalidInput", e.what());
    }

    try {
        if (validate_cmd->parsed()) {
            const ShiftGraph g = load_instance(o.file, false);
            const ValidationReport v = validate(g);
            Json j = report_header("validate", &g);
            j["ok"] = v.ok();
            j["errors"] = v.errors;
            j["warnings"] = v.warnings;
            emit(out, j, o.pretty);
            return Success;
        }
        if (gen_cmd->parsed()) {
            ShiftGraph g;
            std::string kind;
            if (gen_an->parsed()) {
                kind = "an";
                const std::string word = o.orientation.empty() ? std::string(o.n > 0 ? o.n - 1 : 0, '>') : o.orientation;
                g = gen_dynkin_an(o.n, word, PrimeField::from_environment());
            } else if (gen_a2->parsed()) {
                kind = "a2";
                auto [graph, heart] = derhed::gen_a2(PrimeField::from_environment());
                if (!o.heart_out.empty()) write_file(o.heart_out, to_json(graph, heart));
                g = std::move(graph);
            } else if (gen_dual->parsed()) {
                kind = "dual";
                g = gen_dual_numbers(o.max_length, o.window, PrimeField::from_environment());
            } else if (gen_semi->parsed()) {
                kind = "semisimple";
                g = gen_semisimple_block(o.period, o.end_dim);
            } else {
                kind = "point";
                g = derhed::gen_point();
            }
            write_file(o.out_file, to_json(g));
            Json j = report_header("gen", &g);
            j["generator"] = kind;
            j["out"] = o.out_file;
            j["orbits"] = g.size();
            j["edges"] = g.edge_count();
            if (!o.heart_out.empty()) j["heart_out"] = o.heart_out;
            emit(out, j, o.pretty);
            return Success;
        }
        if (hom_cmd->parsed()) {
            const MonomialAlgebra alg = algebra_from_json(read_json_file(o.file), PrimeField::from_environment());
            const ProjComplex x = complex_from_json(alg, read_json_file(o.x_file));
            const ProjComplex y = complex_from_json(alg, read_json_file(o.y_file));
            for (const auto* c : {&x, &y}) {
                const ComplexReport r = check_complex(alg, *c);
                if (!r.valid) {
                    std::string msg = "not a complex:";
                    for (const auto& f : r.failures) msg += " " + f + ";";
                    msg.pop_back();
                    throw Error(ErrorKind::InvalidComplex, msg);
                }
            }
            const HomSpace h = compute_hom(alg, x, y, o.shift);
            Json j = report_header("hom", nullptr);
            j["algebra"] = {{"file", o.file}, {"dimension", alg.dimension()},
                            {"field_char", alg.field().characteristic()}};
            j["shift"] = o.shift;
            j["dim"] = h.dimension();
            j["chain_maps"] = h.cycles.size();
            j["null_homotopic"] = h.boundary_rank;
            emit(out, j, o.pretty);
            return Success;
        }

        Json warnings = Json::array();
        const ShiftGraph g = load_instance(o.file, true, &warnings);
        const PathCalculus calc(g, o.jobs);

        if (blocks_cmd->parsed()) {
            Json j = report_header("blocks", &g);
            j["warnings"] = warnings;
            j["blocks"] = Json::array();
            for (const auto& b : calc.blocks()) j["blocks"].push_back(ids_json(g, b));
            emit(out, j, o.pretty);
            return Success;
        }
        if (check_cmd->parsed()) {
            Json j = report_header("check", &g);
            j["warnings"] = warnings;
            j["blocks"] = Json::array();
            bool all_hereditary = true;
            bool within_window = false;
            for (const auto& b : calc.blocks()) {
                Json bj = block_report(calc, b);
                const std::string v = bj["verdict"].get<std::string>();
                all_hereditary = all_hereditary && v != "not-hereditary";
                within_window = within_window || v == "hereditary-within-window";
                j["blocks"].push_back(std::move(bj));
            }
            const Verdict overall = !all_hereditary ? Verdict::NotHereditary
                                    : within_window ? Verdict::HereditaryWithinWindow
                                                    : Verdict::Hereditary;
            j["verdict"] = std::string(to_string(overall));
            emit(out, j, o.pretty);
            return o.assert_hereditary && overall != Verdict::Hereditary ? AssertionFailed : Success;
        }
        if (heart_cmd->parsed()) {
            const std::size_t x = g.orbit_index(o.from);
            const auto& block = calc.blocks()[calc.block_of(x)];
            const Heart heart = extract_heart(calc, block, x);
            Json j = report_header("heart", &g);
            j["warnings"] = warnings;
            j["source"] = o.from;
            j["heart"] = to_json(g, heart);
            j["check"] = heart_check_json(g, verify_heart(g, heart));
            emit(out, j, o.pretty);
            return Success;
        }
        if (verify_cmd->parsed()) {
            const Heart heart = heart_from_json(g, read_json_file(o.heart_file));
            Json j = report_header("verify-heart", &g);
            j["warnings"] = warnings;
            j["heart"] = to_json(g, heart);
            j["check"] = heart_check_json(g, verify_heart(g, heart));
            emit(out, j, o.pretty);
            return Success;
        }
        if (dist_cmd->parsed()) {
            Json j = report_header("dist", &g);
            j["from"] = o.from;
            j["to"] = o.to;
            j["min_weight"] = weight_json(calc.min_weight(o.from, o.to));
            emit(out, j, o.pretty);
            return Success;
        }
        if (path_cmd->parsed()) {
            const ObjRef a = parse_obj_ref(g, o.from);
            const ObjRef b = parse_obj_ref(g, o.to);
            Json j = report_header("path", &g);
            j["from"] = format_obj_ref(g, a);
            j["to"] = format_obj_ref(g, b);
            j["path"] = walk_json(g, calc.path_exists(a, b));
            emit(out, j, o.pretty);
            return Success;
        }
        if (classify_cmd->parsed()) {
            Json j = report_header("classify", &g);
            j["blocks"] = Json::array();
            for (const auto& b : calc.blocks()) {
                j["blocks"].push_back({{"orbits", ids_json(g, b)}, {"classification", degeneracy_json(classify_degenerate(g, b))}});
            }
            emit(out, j, o.pretty);
            return Success;
        }
        if (directing_cmd->parsed()) {
            Json j = report_header("directing", &g);
            j["directing"] = ids_json(g, calc.directing_objects());
            emit(out, j, o.pretty);
            return Success;
        }
    } catch (const Error& e) {
        return fail(to_string(e.kind()), e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail("InvalidInput", e.what());
    }
    return fail("InvalidInput", "no command given");
}

} // namespace derhed::cli
