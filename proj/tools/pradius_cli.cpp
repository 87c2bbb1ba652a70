// Command-line front end: parses poset / code / list files, dispatches to the
// solvers and prints human-readable or JSON results. Exit codes: 0 optimal
// result, 1 input error (or oracle disagreement in `check`), 2 best-effort
// result after budget exhaustion or a heuristic run.
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pradius/classic_partition.hpp"
#include "pradius/io.hpp"
#include "pradius/oracle.hpp"
#include "pradius/radius_engine.hpp"

namespace {

using nlohmann::ordered_json;
using namespace pradius;

struct CommonOpts {
    std::optional<std::uint64_t> budget_nodes;
    std::optional<double> budget_ms;
    bool json = false;
    bool anytime = false;
};

struct PruneOpts {
    bool all_off = false;
    bool discrepancy_off = false;
    bool parity_off = false;
    bool support_dedup_off = false;
    bool ideal_dedup_off = false;
    bool containment_off = false;
    bool size_bound_off = false;
    bool hierarchical_off = false;

    MatrixPruneOptions matrix() const {
        MatrixPruneOptions m;
        m.discrepancy_bound = !(all_off || discrepancy_off);
        m.parity = !(all_off || parity_off);
        return m;
    }
    CodeRadiusOptions code() const {
        CodeRadiusOptions c;
        c.support_dedup = !(all_off || support_dedup_off);
        c.ideal_dedup = !(all_off || ideal_dedup_off);
        c.containment = !(all_off || containment_off);
        c.size_bound = !(all_off || size_bound_off);
        c.hierarchical_shortcut = !(all_off || hierarchical_off);
        c.matrix_prune = matrix();
        return c;
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--budget-nodes", opts.budget_nodes, "Stop after this many expanded nodes")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget-ms", opts.budget_ms, "Stop after this many milliseconds")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--json", opts.json, "Print the result as JSON");
    cmd->add_flag("--anytime", opts.anytime,
                  "Print one JSON line per improving incumbent while searching");
}

void add_matrix_prunes(CLI::App* cmd, PruneOpts& prune) {
    cmd->add_flag("--no-prune", prune.all_off, "Disable every pruning device");
    cmd->add_flag("--no-prune-discrepancy", prune.discrepancy_off,
                  "Disable the discrepancy lower-bound prune");
    cmd->add_flag("--no-prune-parity", prune.parity_off,
                  "Disable the parity round-up and parity-floor early exit");
}

void add_code_prunes(CLI::App* cmd, PruneOpts& prune) {
    add_matrix_prunes(cmd, prune);
    cmd->add_flag("--no-prune-support-dedup", prune.support_dedup_off,
                  "Evaluate codewords with equal supports separately");
    cmd->add_flag("--no-prune-ideal-dedup", prune.ideal_dedup_off,
                  "Evaluate codewords with equal support ideals separately");
    cmd->add_flag("--no-prune-containment", prune.containment_off,
                  "Evaluate codewords whose ideal contains an earlier one");
    cmd->add_flag("--no-prune-size-bound", prune.size_bound_off,
                  "Evaluate codewords the ideal-size bound would skip");
    cmd->add_flag("--no-prune-hierarchical", prune.hierarchical_off,
                  "Skip the hierarchical-poset closed form for codes");
}

SearchControl make_control(const CommonOpts& opts) {
    SearchControl control;
    control.node_budget = opts.budget_nodes;
    control.time_budget_ms = opts.budget_ms;
    if (opts.anytime)
        control.on_improve = [](const Improvement& imp) {
            ordered_json line{{"value", imp.value},
                              {"nodes", imp.nodes_expanded},
                              {"elapsed_ms", imp.elapsed_ms}};
            std::cout << line.dump() << "\n";
        };
    return control;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return in;
}

PosetFile load_poset(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return read_poset(in);
}

std::string classification_name(const Classification& c) {
    if (c.is_chain) return "chain";
    if (c.is_antichain) return "antichain";
    if (c.is_hierarchical) return "hierarchical";
    if (c.has_disjoint_maximal_ideals) return "disjoint-maximal-ideals";
    return "general";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string labels_line(const ElementSet& s) {
    std::string out;
    for (int l : s.labels()) {
        if (!out.empty()) out += " ";
        out += std::to_string(l);
    }
    return out.empty() ? "-" : out;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

Strategy parse_strategy(const std::string& name) {
    if (name == "brute") return Strategy::Brute;
    if (name == "differencing") return Strategy::Differencing;
    return Strategy::Auto;
}

ordered_json radius_json(const std::string& command, const PartitionOutcome& out,
                         const std::string& strategy, double elapsed) {
    return ordered_json{{"command", command},
                        {"radius", out.radius},
                        {"lambda_star", out.discordancy},
                        {"partition",
                         ordered_json{{"primary", out.primary_set.labels()},
                                      {"secondary", out.secondary_set.labels()}}},
                        {"optimal", out.optimal},
                        {"nodes", out.nodes_expanded},
                        {"elapsed_ms", elapsed},
                        {"strategy", strategy}};
}

void print_radius_human(const PosetRadiusResult& r, double elapsed) {
    std::cout << "radius: " << r.outcome.radius << "\n"
              << "lambda_star: " << r.outcome.discordancy << "\n"
              << "primary: " << labels_line(r.outcome.primary_set) << "\n"
              << "secondary: " << labels_line(r.outcome.secondary_set) << "\n"
              << "classification: " << classification_name(r.classification) << "\n"
              << "strategy: " << r.strategy_used << "\n"
              << "optimal: " << yes_no(r.outcome.optimal) << "\n"
              << "nodes: " << r.outcome.nodes_expanded << "\n"
              << "elapsed_ms: " << elapsed << "\n";
}

int finish(bool optimal) { return optimal ? 0 : 2; }

// ---- partition --------------------------------------------------------------

int run_partition(const std::string& path, const std::string& algorithm,
                  const CommonOpts& opts) {
    std::ifstream in = open_or_throw(path);
    IntList values = read_int_list(in);
    SearchControl control = make_control(opts);
    const auto t0 = std::chrono::steady_clock::now();
    ClassicPartitionResult r;
    if (algorithm == "kk")
        r = kk_ldm(values);
    else if (algorithm == "brute")
        r = brute_partition(values);
    else
        r = ckk(values, control);
    const double elapsed = ms_since(t0);

    auto block_values = [&](const std::vector<std::size_t>& block) {
        std::vector<long long> out;
        out.reserve(block.size());
        for (std::size_t i : block) out.push_back(values[i]);
        return out;
    };
    const std::vector<long long> b1 = block_values(r.block1);
    const std::vector<long long> b2 = block_values(r.block2);

    if (opts.json) {
        ordered_json j{{"discrepancy", r.discrepancy},
                       {"block1", b1},
                       {"block2", b2},
                       {"optimal", r.optimal},
                       {"nodes", r.nodes_expanded}};
        std::cout << j.dump(2) << "\n";
    } else {
        auto join = [](const std::vector<long long>& v) {
            std::string out;
            for (long long x : v) {
                if (!out.empty()) out += " ";
                out += std::to_string(x);
            }
            return out.empty() ? "-" : out;
        };
        std::cout << "discrepancy: " << r.discrepancy << "\n"
                  << "block1: " << join(b1) << "\n"
                  << "block2: " << join(b2) << "\n"
                  << "optimal: " << yes_no(r.optimal) << "\n"
                  << "nodes: " << r.nodes_expanded << "\n"
                  << "elapsed_ms: " << elapsed << "\n";
        if (algorithm == "kk")
            for (const IntList& inst : r.instances) std::cout << "instance: " << join(inst) << "\n";
    }
    return finish(r.optimal);
}

// ---- poset-radius / vector-radius -------------------------------------------

int run_poset_radius(const std::string& path, const std::string& algorithm,
                     const CommonOpts& opts, const PruneOpts& prune, bool trace) {
    PosetFile pf = load_poset(path);
    SearchControl control = make_control(opts);
    MatrixSearchOptions mopts;
    mopts.prune = prune.matrix();
    if (trace) mopts.trace = &std::cerr;
    const auto t0 = std::chrono::steady_clock::now();
    PosetRadiusResult r = radius_of_poset(pf.poset, parse_strategy(algorithm), control, mopts);
    const double elapsed = ms_since(t0);
    if (opts.json)
        std::cout << radius_json("poset-radius", r.outcome, r.strategy_used, elapsed).dump(2)
                  << "\n";
    else
        print_radius_human(r, elapsed);
    return finish(r.outcome.optimal);
}

int run_vector_radius(const std::string& path, const std::string& literal, int q,
                      const std::string& algorithm, const CommonOpts& opts,
                      const PruneOpts& prune, bool trace) {
    PosetFile pf = load_poset(path);
    FieldVector v = parse_vector_literal(literal, q);
    SearchControl control = make_control(opts);
    MatrixSearchOptions mopts;
    mopts.prune = prune.matrix();
    if (trace) mopts.trace = &std::cerr;
    const auto t0 = std::chrono::steady_clock::now();
    PosetRadiusResult r = radius_of_vector(pf.poset, v, parse_strategy(algorithm), control, mopts);
    const double elapsed = ms_since(t0);
    if (opts.json) {
        ordered_json j = radius_json("vector-radius", r.outcome, r.strategy_used, elapsed);
        j["vector"] = format_vector(v);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "vector: " << format_vector(v) << "\n";
        print_radius_human(r, elapsed);
    }
    return finish(r.outcome.optimal);
}

// ---- code-radius -------------------------------------------------------------

int run_code_radius(const std::string& poset_path, const std::string& code_path,
                    const CommonOpts& opts, const PruneOpts& prune, int threads,
                    std::uint64_t cap) {
    PosetFile pf = load_poset(poset_path);
    std::ifstream cin_ = open_or_throw(code_path);
    LinearCode code = read_code(cin_);
    CodeRadiusOptions copts = prune.code();
    copts.threads = threads;
    copts.cap = cap;
    SearchControl control = make_control(opts);
    const auto t0 = std::chrono::steady_clock::now();
    CodeRadiusResult r = radius_of_code(pf.poset, code, copts, control);
    const double elapsed = ms_since(t0);

    // The optimum split for the winning codeword (silent re-run, same budgets).
    SearchControl quiet;
    quiet.node_budget = opts.budget_nodes;
    quiet.time_budget_ms = opts.budget_ms;
    PosetRadiusResult win = radius_of_vector(pf.poset, r.packing_vector, Strategy::Auto, quiet,
                                             {copts.matrix_prune, nullptr, nullptr});

    std::vector<std::uint64_t> method_counts(4, 0);
    for (const CodewordClassStat& st : r.stats)
        ++method_counts[static_cast<std::size_t>(st.method)];

    if (opts.json) {
        ordered_json j = radius_json("code-radius", win.outcome, r.strategy_used, elapsed);
        j["radius"] = r.radius;
        j["optimal"] = r.optimal;
        j["nodes"] = r.nodes_expanded;
        j["minimum_distance"] = r.minimum_distance;
        j["packing_vector"] = format_vector(r.packing_vector);
        j["codewords"] = r.codewords_enumerated;
        ordered_json classes = ordered_json::array();
        for (const CodewordClassStat& st : r.stats)
            classes.push_back(ordered_json{{"vector", format_vector(st.representative)},
                                           {"codewords", st.codewords},
                                           {"method", codeword_method_name(st.method)},
                                           {"radius", st.radius}});
        j["classes"] = classes;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "minimum_distance: " << r.minimum_distance << "\n"
                  << "radius: " << r.radius << "\n"
                  << "packing_vector: " << format_vector(r.packing_vector) << "\n"
                  << "lambda_star: " << win.outcome.discordancy << "\n"
                  << "primary: " << labels_line(win.outcome.primary_set) << "\n"
                  << "secondary: " << labels_line(win.outcome.secondary_set) << "\n"
                  << "strategy: " << r.strategy_used << "\n"
                  << "optimal: " << yes_no(r.optimal) << "\n"
                  << "nodes: " << r.nodes_expanded << "\n"
                  << "codewords: " << r.codewords_enumerated << "\n"
                  << "elapsed_ms: " << elapsed << "\n"
                  << "classes: evaluated=" << method_counts[0]
                  << " skipped-containment=" << method_counts[1]
                  << " skipped-size-bound=" << method_counts[2]
                  << " skipped-hierarchical=" << method_counts[3] << "\n";
        for (const CodewordClassStat& st : r.stats) {
            std::cout << "  " << format_vector(st.representative) << "  x"
                      << st.codewords << "  " << codeword_method_name(st.method);
            if (st.radius >= 0) std::cout << "  radius " << st.radius;
            std::cout << "\n";
        }
    }
    return finish(r.optimal);
}

// ---- standard-form -----------------------------------------------------------

int run_standard_form(const std::string& path) {
    PosetFile pf = load_poset(path);
    Poset q = pf.poset.standard_form();
    if (pf.matrix_format)
        write_poset_matrix(std::cout, q);
    else
        write_poset_relations(std::cout, q);
    return 0;
}

// ---- check -------------------------------------------------------------------

int run_check(const std::string& path, const std::string& vector_literal, int q,
              const std::string& code_path, std::uint64_t cap) {
    PosetFile pf = load_poset(path);
    std::vector<OracleReport> reports;
    if (!vector_literal.empty()) {
        reports = check_vector_radius(pf.poset, parse_vector_literal(vector_literal, q));
    } else if (!code_path.empty()) {
        std::ifstream in = open_or_throw(code_path);
        reports = check_code_radius(pf.poset, read_code(in), cap);
    } else {
        reports = check_poset_radius(pf.poset);
    }
    bool all_agree = true;
    for (const OracleReport& rep : reports) {
        ordered_json line{{"quantity", rep.quantity},
                          {"oracle", rep.oracle_value},
                          {"engine", rep.engine_value},
                          {"agree", rep.agree},
                          {"instance", rep.instance}};
        std::cout << line.dump() << "\n";
        all_agree = all_agree && rep.agree;
    }
    return all_agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"packing radii of vectors and linear codes under poset metrics"};
    app.require_subcommand(1);

    // partition
    std::string part_file;
    std::string part_algorithm = "auto";
    CommonOpts part_opts;
    CLI::App* part = app.add_subcommand("partition", "Two-way partition of an integer list");
    part->add_option("file", part_file, "List file: whitespace-separated positive integers")
        ->required();
    part->add_option("--algorithm", part_algorithm, "auto | kk | ckk | brute")
        ->check(CLI::IsMember({"auto", "kk", "ckk", "brute"}));
    add_common(part, part_opts);

    // poset-radius
    std::string pr_file;
    std::string pr_algorithm = "auto";
    CommonOpts pr_opts;
    PruneOpts pr_prune;
    bool pr_trace = false;
    CLI::App* pr = app.add_subcommand("poset-radius", "Packing radius of a poset");
    pr->add_option("poset", pr_file, "Poset file (relations or adjacency matrix)")->required();
    pr->add_option("--algorithm", pr_algorithm, "auto | brute | differencing")
        ->check(CLI::IsMember({"auto", "brute", "differencing"}));
    add_common(pr, pr_opts);
    add_matrix_prunes(pr, pr_prune);
    pr->add_flag("--trace", pr_trace, "Dump the search tree to stderr");

    // vector-radius
    std::string vr_file, vr_vector;
    int vr_q = 2;
    std::string vr_algorithm = "auto";
    CommonOpts vr_opts;
    PruneOpts vr_prune;
    bool vr_trace = false;
    CLI::App* vr = app.add_subcommand("vector-radius", "Packing radius of a vector");
    vr->add_option("poset", vr_file, "Poset file")->required();
    vr->add_option("--vector", vr_vector,
                   "Vector literal: digit string for q <= 10, comma-separated otherwise")
        ->required();
    vr->add_option("-q,--field", vr_q, "Prime field size (default 2)");
    vr->add_option("--algorithm", vr_algorithm, "auto | brute | differencing")
        ->check(CLI::IsMember({"auto", "brute", "differencing"}));
    add_common(vr, vr_opts);
    add_matrix_prunes(vr, vr_prune);
    vr->add_flag("--trace", vr_trace, "Dump the search tree to stderr");

    // code-radius
    std::string cr_file, cr_code;
    CommonOpts cr_opts;
    PruneOpts cr_prune;
    int cr_threads = 1;
    std::uint64_t cr_cap = kDefaultEnumerationCap;
    CLI::App* cr = app.add_subcommand("code-radius", "Packing radius of a linear code");
    cr->add_option("poset", cr_file, "Poset file")->required();
    cr->add_option("--code", cr_code, "Code file: header 'q n k' then k generator rows")
        ->required();
    cr->add_option("--threads", cr_threads, "Worker threads for per-codeword evaluation")
        ->check(CLI::PositiveNumber);
    cr->add_option("--cap", cr_cap, "Refuse to enumerate more than this many codewords")
        ->check(CLI::PositiveNumber);
    add_common(cr, cr_opts);
    add_code_prunes(cr, cr_prune);

    // standard-form
    std::string sf_file;
    CLI::App* sf = app.add_subcommand("standard-form",
                                      "Rewrite a poset in radius-preserving standard form");
    sf->add_option("poset", sf_file, "Poset file")->required();

    // check
    std::string ck_file, ck_vector, ck_code;
    int ck_q = 2;
    std::uint64_t ck_cap = kDefaultEnumerationCap;
    CLI::App* ck = app.add_subcommand("check", "Compare the engine against brute-force oracles");
    ck->add_option("poset", ck_file, "Poset file")->required();
    ck->add_option("--vector", ck_vector, "Check one vector instead of the bare poset");
    ck->add_option("-q,--field", ck_q, "Prime field size for --vector (default 2)");
    ck->add_option("--code", ck_code, "Check a code instead of the bare poset");
    ck->add_option("--cap", ck_cap, "Codeword enumeration cap")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (part->parsed()) return run_partition(part_file, part_algorithm, part_opts);
        if (pr->parsed())
            return run_poset_radius(pr_file, pr_algorithm, pr_opts, pr_prune, pr_trace);
        if (vr->parsed())
            return run_vector_radius(vr_file, vr_vector, vr_q, vr_algorithm, vr_opts, vr_prune,
                                     vr_trace);
        if (cr->parsed())
            return run_code_radius(cr_file, cr_code, cr_opts, cr_prune, cr_threads, cr_cap);
        if (sf->parsed()) return run_standard_form(sf_file);
        if (ck->parsed()) return run_check(ck_file, ck_vector, ck_q, ck_code, ck_cap);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
