#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chibound/bounds.hpp"
#include "chibound/coloring.hpp"
#include "chibound/decomposition.hpp"
#include "chibound/errors.hpp"
#include "chibound/gen.hpp"
#include "chibound/io.hpp"
#include "chibound/oracle.hpp"
#include "chibound/recognition.hpp"
#include "chibound/report_json.hpp"
#include "chibound/suite.hpp"

namespace {

using namespace chibound;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load(const std::string& path) {
    std::string text = slurp(path);
    std::istringstream in(text);
    return io::read_auto(in);
}

void emit(const ojson& j, bool plain) {
    if (plain) {
        for (auto it = j.begin(); it != j.end(); ++it)
            std::cout << it.key() << ": " << it.value().dump() << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

std::vector<Pattern> parse_forbid(const std::string& csv) {
    std::vector<Pattern> out;
    std::istringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "bull") out.push_back(Pattern::bull);
        else if (tok == "diamond") out.push_back(Pattern::diamond);
        else if (tok == "triangle") out.push_back(Pattern::triangle);
        else if (tok == "P5" || tok == "p5") out.push_back(Pattern::p5);
        else if (tok == "P6" || tok == "p6") out.push_back(Pattern::p6);
        else if (tok == "P7" || tok == "p7") out.push_back(Pattern::p7);
        else throw Error("unknown pattern '" + tok + "' (want bull,diamond,triangle,P5,P6,P7)");
    }
    return out;
}

Coloring read_coloring_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    Coloring c;
    c.assignment.assign(n, 0);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string head;
        if (!(ss >> head) || head == "#") continue;
        int v = std::stoi(head);
        int col;
        if (!(ss >> col)) throw ParseError("line " + std::to_string(lineno) + ": want 'vertex color'", lineno, 1);
        if (v < 0 || v >= n) throw ParseError("line " + std::to_string(lineno) + ": vertex out of range", lineno, 1);
        c.assignment[v] = col;
        c.palette = std::max(c.palette, col);
    }
    c.certificate = "file";
    return c;
}

int dispatch(CLI::App& app) {
    // classify
    auto* classify_cmd = app.get_subcommand("classify");
    if (classify_cmd->parsed()) {
        auto file = classify_cmd->get_option("file")->as<std::string>();
        int probe = classify_cmd->get_option("--probe-path")->as<int>();
        bool plain = classify_cmd->get_option("--plain")->as<bool>();
        Graph g = load(file);
        emit(to_json(classify(g, probe)), plain);
        return 0;
    }
    // decompose
    auto* decompose_cmd = app.get_subcommand("decompose");
    if (decompose_cmd->parsed()) {
        Graph g = load(decompose_cmd->get_option("file")->as<std::string>());
        bool plain = decompose_cmd->get_option("--plain")->as<bool>();
        CliqueLayering L = clique_layering(g, max_clique(g));
        emit(to_json(L), plain);
        return 0;
    }
    // color
    auto* color_cmd = app.get_subcommand("color");
    if (color_cmd->parsed()) {
        Graph g = load(color_cmd->get_option("file")->as<std::string>());
        std::string theorem = color_cmd->get_option("--theorem")->as<std::string>();
        std::string strategy = color_cmd->get_option("--tf-strategy")->as<std::string>();
        bool plain = color_cmd->get_option("--plain")->as<bool>();
        TriangleFreeColorer tf;
        tf.strategy = strategy == "dsatur" ? TfStrategy::dsatur_checked : TfStrategy::exact;
        std::pair<Coloring, BoundCertificate> result;
        if (theorem == "auto") result = color_dispatch(g);
        else if (theorem == "thm32") result = color_bull_diamond(g, tf);
        else if (theorem == "p5") result = color_p5(g);
        else if (theorem == "p6") result = color_p6(g);
        else if (theorem == "p7") result = color_p7(g);
        else throw Error("unknown theorem '" + theorem + "'");
        emit(to_json(result.first, result.second), plain);
        return 0;
    }
    // chi
    auto* chi_cmd = app.get_subcommand("chi");
    if (chi_cmd->parsed()) {
        Graph g = load(chi_cmd->get_option("file")->as<std::string>());
        bool plain = chi_cmd->get_option("--plain")->as<bool>();
        auto [chi, coloring] = chromatic_number_exact(g);
        if (plain) {
            std::cout << chi << "\n";
            for (int v = 0; v < g.vertex_count(); ++v)
                std::cout << v << " " << coloring.assignment[v] << "\n";
        } else {
            ojson j;
            j["chi"] = chi;
            j["coloring"] = to_json(coloring);
            std::cout << j.dump(2) << "\n";
        }
        return 0;
    }
    // bounds
    auto* bounds_cmd = app.get_subcommand("bounds");
    if (bounds_cmd->parsed()) {
        Graph g = load(bounds_cmd->get_option("file")->as<std::string>());
        bool plain = bounds_cmd->get_option("--plain")->as<bool>();
        ClassReport rep = classify(g, 7);
        emit(to_json(eval_bounds(g, rep)), plain);
        return 0;
    }
    // sample
    auto* sample_cmd = app.get_subcommand("sample");
    if (sample_cmd->parsed()) {
        SamplerSpec spec;
        spec.n = sample_cmd->get_option("--n")->as<int>();
        spec.p = sample_cmd->get_option("--p")->as<double>();
        spec.seed = sample_cmd->get_option("--seed")->as<uint64_t>();
        spec.family = parse_forbid(sample_cmd->get_option("--forbid")->as<std::string>());
        spec.connect = sample_cmd->get_option("--connect")->as<bool>();
        spec.max_attempts = sample_cmd->get_option("--max-attempts")->as<int>();
        Graph g = sample(spec);
        std::string out = sample_cmd->get_option("--out")->as<std::string>();
        if (out.empty())
            io::write_edge_list(g, std::cout);
        else
            io::write_file(g, out);
        return 0;
    }
    // verify
    auto* verify_cmd = app.get_subcommand("verify");
    if (verify_cmd->parsed()) {
        Graph g = load(verify_cmd->get_option("graph")->as<std::string>());
        Coloring c = read_coloring_file(verify_cmd->get_option("coloring")->as<std::string>(),
                                        g.vertex_count());
        bool plain = verify_cmd->get_option("--plain")->as<bool>();
        auto v = verify_coloring(g, c);
        emit(to_json(v), plain);
        return v.ok() ? 0 : 1;
    }
    // suite
    auto* suite_cmd = app.get_subcommand("suite");
    if (suite_cmd->parsed()) {
        uint64_t seed = suite_cmd->get_option("--seed")->as<uint64_t>();
        bool serial = suite_cmd->get_option("--serial")->as<bool>();
        bool as_json = suite_cmd->get_option("--json")->as<bool>();
        auto start = std::chrono::steady_clock::now();
        auto results = suite::run_all(seed, !serial);
        bool ok = suite::print_results(results, std::cout);
        if (as_json) {
            ojson run;
            run["command"] = "suite --seed " + std::to_string(seed);
            run["input_digest"] = content_digest(std::to_string(seed));
            ojson rows = ojson::array();
            for (const auto& r : results) {
                ojson row;
                row["id"] = r.id;
                row["name"] = r.name;
                row["passed"] = r.passed;
                row["checks"] = r.checks;
                row["failures"] = r.failures;
                row["seconds"] = r.seconds;
                if (!r.detail.empty()) row["detail"] = r.detail;
                rows.push_back(row);
            }
            run["outputs"] = rows;
            run["seconds"] =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            run["passed"] = ok;
            std::cout << run.dump(2) << "\n";
        }
        return ok ? 0 : 1;
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coloring toolbox for (bull, diamond)-free graphs"};
    app.require_subcommand(1);

    auto* classify_cmd = app.add_subcommand("classify", "pattern and class membership report");
    classify_cmd->add_option("file", "graph file (DIMACS or edge list)")->required();
    classify_cmd->add_option("--probe-path", "induced-path probe length t")->default_val(7);
    classify_cmd->add_flag("--plain", "plain key/value output");

    auto* decompose_cmd = app.add_subcommand("decompose", "clique-rooted layering");
    decompose_cmd->add_option("file", "graph file")->required();
    decompose_cmd->add_flag("--plain", "plain key/value output");

    auto* color_cmd = app.add_subcommand("color", "constructive theorem coloring");
    color_cmd->add_option("file", "graph file")->required();
    color_cmd->add_option("--theorem", "auto|thm32|p5|p6|p7")
        ->default_val(std::string("auto"))
        ->check(CLI::IsMember({"auto", "thm32", "p5", "p6", "p7"}));
    color_cmd->add_option("--tf-strategy", "exact|dsatur")
        ->default_val(std::string("exact"))
        ->check(CLI::IsMember({"exact", "dsatur"}));
    color_cmd->add_flag("--plain", "plain key/value output");

    auto* chi_cmd = app.add_subcommand("chi", "exact chromatic number");
    chi_cmd->add_option("file", "graph file")->required();
    chi_cmd->add_flag("--exact", "exact search (always on; kept for interface stability)");
    chi_cmd->add_flag("--plain", "print the number, then 'vertex color' lines");

    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bound report");
    bounds_cmd->add_option("file", "graph file")->required();
    bounds_cmd->add_flag("--plain", "plain key/value output");

    auto* sample_cmd = app.add_subcommand("sample", "seeded hereditary-class sampler");
    sample_cmd->add_option("--n", "vertex count")->required();
    sample_cmd->add_option("--p", "edge density in [0,1]")->required();
    sample_cmd->add_option("--forbid", "comma list: bull,diamond,triangle,P5,P6,P7")
        ->default_val(std::string("bull,diamond"));
    sample_cmd->add_option("--seed", "64-bit seed")->default_val(1);
    sample_cmd->add_option("--out", "output file (stdout when omitted)")->default_val(std::string(""));
    sample_cmd->add_flag("--connect", "require a connected sample");
    sample_cmd->add_option("--max-attempts", "redraw budget")->default_val(64);

    auto* verify_cmd = app.add_subcommand("verify", "check a coloring file against a graph");
    verify_cmd->add_option("graph", "graph file")->required();
    verify_cmd->add_option("coloring", "file of 'vertex color' lines")->required();
    verify_cmd->add_flag("--plain", "plain key/value output");

    auto* suite_cmd = app.add_subcommand("suite", "run the full verification battery");
    suite_cmd->add_option("--seed", "battery seed")->default_val(1);
    suite_cmd->add_flag("--serial", "disable the worker pool");
    suite_cmd->add_flag("--json", "append a machine-readable run report");

    try {
        app.parse(argc, argv);
        return dispatch(app);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const chibound::ClassViolation& e) {
        std::cerr << "class violation: " << e.what() << "\n";
        if (!e.witness.empty()) {
            std::cerr << "witness:";
            for (int v : e.witness) std::cerr << " " << v;
            std::cerr << "\n";
        }
        return 2;
    } catch (const chibound::DeskLimitExceeded& e) {
        std::cerr << "desk limit: " << e.what() << "\n";
        return 3;
    } catch (const chibound::ProofClaimFailure& e) {
        std::cerr << "internal error (structural claim failed): " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
