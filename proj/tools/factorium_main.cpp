// factorium: exact toolkit for k-factors, disjoint perfect matchings and
// Tutte-style certificates at desk scale.
//
// Exit codes: 0 = property holds / object found, 1 = not found /
// counterexample exists, 2 = usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "factorium/enumeration.hpp"
#include "factorium/factor.hpp"
#include "factorium/factorization.hpp"
#include "factorium/proof_ledger.hpp"

using nlohmann::json;
using namespace factorium;

namespace {

int default_jobs() {
    const char* env = std::getenv("FACTORIUM_JOBS");
    if (!env) return 1;
    int v = std::atoi(env);
    return v < 1 ? 1 : v;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// positional graph6 string, --file, or stdin; files/stdin may hold one graph6
// per line or a single DIMACS edge-format graph
std::vector<Graph> read_graph_inputs(const std::string& positional, const std::string& file) {
    if (!positional.empty()) return {parse_graph6(strip(positional))};
    std::string content;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open file: " + file);
        std::stringstream buf;
        buf << in.rdbuf();
        content = buf.str();
    } else {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        content = buf.str();
    }
    std::string first = strip(content.substr(0, content.find('\n')));
    if (!first.empty() && (first[0] == 'p' || first[0] == 'c') &&
        (first.size() < 2 || first[1] == ' ' || first[1] == '\t')) {
        std::istringstream in(content);
        return {parse_dimacs(in)};
    }
    std::vector<Graph> graphs;
    std::istringstream lines(content);
    std::string line;
    while (std::getline(lines, line)) {
        line = strip(line);
        if (!line.empty()) graphs.push_back(parse_graph6(line));
    }
    if (graphs.empty()) throw std::invalid_argument("no graph input given");
    return graphs;
}

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

json edges_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (auto [u, v] : edges) out.push_back(json::array({u, v}));
    return out;
}

json matchings_json(const Factorization& f) {
    json out = json::array();
    for (const auto& m : f.matchings) out.push_back(edges_json(m.edges));
    return out;
}

json certificate_json(const TutteCertificate& c) {
    json odd = json::array();
    for (const auto& comp : c.odd_components) odd.push_back(comp);
    return json{{"S", c.S}, {"T", c.T}, {"eta", c.eta}, {"odd_components", odd}};
}

struct PerGraphOutcome {
    bool success = false;
    std::string result;  // "found", "none", "holds", "fails"
    std::string text;    // text-mode block (without trailing newline handling)
    json witness;
};

// Runs op over every input graph; text mode prints one block per graph,
// structured mode emits a single object (arrays when input has several
// graphs). Exit: worst per-graph code, 2 on input errors.
int run_per_graph(const std::string& command, const json& params, const std::string& positional,
                  const std::string& file, bool json_mode,
                  const std::function<PerGraphOutcome(const Graph&)>& op) {
    auto start = std::chrono::steady_clock::now();
    std::vector<Graph> graphs;
    try {
        graphs = read_graph_inputs(positional, file);
    } catch (const std::exception& ex) {
        std::cerr << command << ": " << ex.what() << "\n";
        return 2;
    }
    int worst = 0;
    std::vector<PerGraphOutcome> outcomes;
    for (const auto& g : graphs) {
        try {
            outcomes.push_back(op(g));
        } catch (const std::exception& ex) {
            std::cerr << command << ": " << ex.what() << "\n";
            return 2;
        }
        if (!outcomes.back().success) worst = std::max(worst, 1);
    }
    if (json_mode) {
        json obj{{"command", command}, {"params", params}};
        if (outcomes.size() == 1) {
            obj["result"] = outcomes[0].result;
            obj["witness"] = outcomes[0].witness;
        } else {
            json results = json::array(), witnesses = json::array();
            for (const auto& o : outcomes) {
                results.push_back(o.result);
                witnesses.push_back(o.witness);
            }
            obj["result"] = results;
            obj["witness"] = witnesses;
        }
        obj["elapsed_ms"] = elapsed_ms(start);
        std::cout << obj.dump() << "\n";
    } else {
        for (const auto& o : outcomes) {
            if (!o.text.empty()) std::cout << o.text;
            std::cout << "result=" << o.result << "\n";
        }
    }
    return worst;
}

std::string edges_text(const std::vector<Edge>& edges) {
    std::string out;
    for (auto [u, v] : edges) out += "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact k-factor / disjoint-perfect-matching toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // inherited: --json may appear after the subcommand
    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit one machine-readable object");

    std::string positional, file;
    int k = 1, n = 0;
    int jobs = default_jobs();
    long long k_max = 500, qp_k_max = 200, case42_range = 1000000;
    bool extremal = false;
    int ore_k = 0, regular_d = -1;

    auto add_graph_opts = [&](CLI::App* cmd) {
        cmd->add_option("graph", positional, "graph6 string");
        cmd->add_option("--file", file, "graph6 lines or DIMACS edge file");
    };

    auto* ore_cmd = app.add_subcommand("ore-check", "evaluate the Ore-type-(k-2) condition");
    ore_cmd->add_option("--k", k, "target factor degree")->required();
    add_graph_opts(ore_cmd);

    auto* factor_cmd = app.add_subcommand("factor", "find a k-factor");
    factor_cmd->add_option("--k", k)->required();
    add_graph_opts(factor_cmd);

    auto* cert_cmd = app.add_subcommand("certificate", "find a Tutte non-existence certificate");
    cert_cmd->add_option("--k", k)->required();
    cert_cmd->add_flag("--extremal", extremal, "apply the extremal selection rules");
    add_graph_opts(cert_cmd);

    auto* decomp_cmd =
        app.add_subcommand("decompose", "k-factor then 1-factorization pipeline");
    decomp_cmd->add_option("--k", k)->required();
    add_graph_opts(decomp_cmd);

    auto* pms_cmd = app.add_subcommand("disjoint-pms", "k edge-disjoint perfect matchings");
    pms_cmd->add_option("--k", k)->required();
    add_graph_opts(pms_cmd);

    auto* win_cmd = app.add_subcommand("search-win", "scan Ore graphs for a Win counterexample");
    win_cmd->add_option("--n", n)->required();
    win_cmd->add_option("--k", k)->required();
    win_cmd->add_option("--jobs", jobs, "worker threads (env FACTORIUM_JOBS)");

    auto* kf_cmd =
        app.add_subcommand("search-kfactor", "scan Ore graphs for a k-factor counterexample");
    kf_cmd->add_option("--n", n)->required();
    kf_cmd->add_option("--k", k)->required();
    kf_cmd->add_option("--jobs", jobs, "worker threads (env FACTORIUM_JOBS)");

    auto* ledger_cmd = app.add_subcommand("ledger", "verify the proof's inequality grids");
    ledger_cmd->add_option("--k-max", k_max, "sweep bound for the k grids");
    ledger_cmd->add_option("--qp-k-max", qp_k_max, "sweep bound for the QP grid");
    ledger_cmd->add_option("--case42-range", case42_range, "sweep bound for m = n-k");

    auto* enum_cmd = app.add_subcommand("enumerate", "isomorph-free graph streams (graph6)");
    enum_cmd->add_option("--n", n)->required();
    enum_cmd->add_option("--ore-k", ore_k, "only Ore-type-(k-2) classes");
    enum_cmd->add_option("--regular", regular_d, "only D-regular classes");
    enum_cmd->add_option("--jobs", jobs, "accepted for symmetry; generation streams sequentially");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage errors are exit 2 regardless of CLI11's own codes
    }

    try {
        if (ore_cmd->parsed()) {
            return run_per_graph("ore-check", {{"k", k}}, positional, file, json_mode,
                                 [&](const Graph& g) {
                                     PerGraphOutcome o;
                                     auto rep = ore_report(g, k);
                                     o.success = rep.is_ore_type();
                                     o.result = o.success ? "holds" : "fails";
                                     std::string d =
                                         rep.deficit ? std::to_string(*rep.deficit) : "inf";
                                     o.text = "deficit=" + d;
                                     if (rep.witness_pair)
                                         o.text += " witness=(" +
                                                   std::to_string(rep.witness_pair->first) + "," +
                                                   std::to_string(rep.witness_pair->second) + ")";
                                     o.text += "\n";
                                     o.witness = {{"deficit", d}};
                                     if (rep.witness_pair)
                                         o.witness["witness_pair"] = {rep.witness_pair->first,
                                                                      rep.witness_pair->second};
                                     return o;
                                 });
        }
        if (factor_cmd->parsed()) {
            return run_per_graph("factor", {{"k", k}}, positional, file, json_mode,
                                 [&](const Graph& g) {
                                     PerGraphOutcome o;
                                     auto f = find_k_factor(g, k);
                                     o.success = f.has_value();
                                     o.result = o.success ? "found" : "none";
                                     if (f) {
                                         o.text = "factor: " + edges_text(f->edges) + "\n";
                                         o.witness = {{"edges", edges_json(f->edges)}};
                                     }
                                     return o;
                                 });
        }
        if (cert_cmd->parsed()) {
            return run_per_graph(
                "certificate", {{"k", k}, {"extremal", extremal}}, positional, file, json_mode,
                [&](const Graph& g) {
                    PerGraphOutcome o;
                    if (extremal) {
                        auto ext = find_extremal_certificate(g, k);
                        o.success = ext.has_value();
                        o.result = o.success ? "found" : "none";
                        if (ext) {
                            o.text = to_text(ext->base) + "u_size: " + std::to_string(ext->u_size) +
                                     "\nrest_size: " + std::to_string(ext->rest_size) + "\n";
                            if (!ext->conclusions_hold())
                                o.text += "conclusion violations present\n";
                            o.witness = certificate_json(ext->base);
                            o.witness["u_size"] = ext->u_size;
                            o.witness["rest_size"] = ext->rest_size;
                            o.witness["conclusions_hold"] = ext->conclusions_hold();
                        }
                    } else {
                        auto cert = find_tutte_certificate(g, k);
                        o.success = cert.has_value();
                        o.result = o.success ? "found" : "none";
                        if (cert) {
                            o.text = to_text(*cert);
                            if (!cert->meets_classical_threshold())
                                o.text += "note: eta=-1 (k*n odd; threshold -2 unreachable)\n";
                            o.witness = certificate_json(*cert);
                        }
                    }
                    return o;
                });
        }
        if (decomp_cmd->parsed()) {
            return run_per_graph("decompose", {{"k", k}}, positional, file, json_mode,
                                 [&](const Graph& g) {
                                     PerGraphOutcome o;
                                     auto f = decompose_via_factor(g, k);
                                     o.success = f.has_value();
                                     o.result = o.success ? "found" : "none";
                                     if (f) {
                                         o.text = to_text(*f);
                                         o.witness = {{"matchings", matchings_json(*f)}};
                                     }
                                     return o;
                                 });
        }
        if (pms_cmd->parsed()) {
            return run_per_graph("disjoint-pms", {{"k", k}}, positional, file, json_mode,
                                 [&](const Graph& g) {
                                     PerGraphOutcome o;
                                     auto f = k_disjoint_perfect_matchings(g, k);
                                     o.success = f.has_value();
                                     o.result = o.success ? "found" : "none";
                                     if (f) {
                                         o.text = to_text(*f);
                                         o.witness = {{"matchings", matchings_json(*f)}};
                                     }
                                     return o;
                                 });
        }
        if (win_cmd->parsed() || kf_cmd->parsed()) {
            bool win = win_cmd->parsed();
            auto start = std::chrono::steady_clock::now();
            SearchReport rep = win ? search_win_counterexample(n, k, jobs)
                                   : search_kfactor_counterexample(n, k, jobs);
            std::string result = "failures=" + std::to_string(rep.failures.size());
            if (json_mode) {
                json obj{{"command", win ? "search-win" : "search-kfactor"},
                         {"params", {{"n", n}, {"k", k}, {"jobs", jobs}}},
                         {"result", result},
                         {"witness",
                          {{"scanned", rep.graphs_scanned},
                           {"ore", rep.ore_graphs},
                           {"failures", rep.failures}}},
                         {"elapsed_ms", elapsed_ms(start)}};
                std::cout << obj.dump() << "\n";
            } else {
                std::cout << to_text(rep);
            }
            return rep.conjecture_holds() ? 0 : 1;
        }
        if (ledger_cmd->parsed()) {
            auto start = std::chrono::steady_clock::now();
            auto results = run_all_checks(k_max, qp_k_max, case42_range);
            bool all_pass = true;
            for (const auto& r : results) all_pass = all_pass && r.passed;
            if (json_mode) {
                json checks = json::array();
                for (const auto& r : results)
                    checks.push_back({{"name", r.check_name},
                                      {"points", r.grid_points_tested},
                                      {"passed", r.passed},
                                      {"violations", r.violations}});
                json obj{{"command", "ledger"},
                         {"params",
                          {{"k_max", k_max},
                           {"qp_k_max", qp_k_max},
                           {"case42_range", case42_range}}},
                         {"result", all_pass ? "pass" : "fail"},
                         {"witness", checks},
                         {"elapsed_ms", elapsed_ms(start)}};
                std::cout << obj.dump() << "\n";
            } else {
                for (const auto& r : results) std::cout << r.to_line() << "\n";
            }
            return all_pass ? 0 : 1;
        }
        if (enum_cmd->parsed()) {
            auto start = std::chrono::steady_clock::now();
            if (enum_cmd->count("--ore-k") && enum_cmd->count("--regular"))
                throw std::invalid_argument("--ore-k and --regular are mutually exclusive");
            // text mode streams; json mode buffers the witness list
            long long count = 0;
            std::vector<std::string> lines;
            GraphSink sink = [&](const Graph& g) {
                ++count;
                if (json_mode)
                    lines.push_back(emit_graph6(g));
                else
                    std::cout << emit_graph6(g) << "\n";
            };
            if (enum_cmd->count("--ore-k"))
                enumerate_ore_graphs(n, ore_k, sink);
            else if (enum_cmd->count("--regular"))
                enumerate_regular_graphs(n, regular_d, sink);
            else
                enumerate_graphs(n, sink);
            if (json_mode) {
                json obj{{"command", "enumerate"},
                         {"params", {{"n", n}, {"ore_k", ore_k}, {"regular", regular_d}}},
                         {"result", "count=" + std::to_string(count)},
                         {"witness", lines},
                         {"elapsed_ms", elapsed_ms(start)}};
                std::cout << obj.dump() << "\n";
            }
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
