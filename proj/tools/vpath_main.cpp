#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vpath/closed_form.hpp"
#include "vpath/constructive.hpp"
#include "vpath/generators.hpp"
#include "vpath/graph.hpp"
#include "vpath/heuristics.hpp"
#include "vpath/io.hpp"
#include "vpath/solver.hpp"

namespace {

using nlohmann::ordered_json;
using namespace vpath;

struct SpecFlags {
    std::string cls;
    int n = 0, p = 0, q = 0, rows = 0, cols = 0;
    std::uint64_t seed = 0;
    std::string id;
};

void add_spec_flags(CLI::App* cmd, SpecFlags& f) {
    cmd->add_option("--class", f.cls,
                    "path, cycle, star, random-tree, wheel, complete, complete-bipartite, "
                    "grid, apollonian-spine, apollonian-random, named")
        ->required();
    cmd->add_option("--n", f.n, "vertex count");
    cmd->add_option("--p", f.p, "small side of the complete bipartite graph");
    cmd->add_option("--q", f.q, "large side of the complete bipartite graph");
    cmd->add_option("--rows", f.rows, "grid rows");
    cmd->add_option("--cols", f.cols, "grid columns");
    cmd->add_option("--seed", f.seed, "seed for the random classes");
    cmd->add_option("--id", f.id, "named instance id");
}

GraphClassSpec to_spec(const SpecFlags& f) {
    if (f.cls == "path") return GraphClassSpec::path(f.n);
    if (f.cls == "cycle") return GraphClassSpec::cycle(f.n);
    if (f.cls == "star") return GraphClassSpec::star(f.n);
    if (f.cls == "random-tree") return GraphClassSpec::random_tree(f.n, f.seed);
    if (f.cls == "wheel") return GraphClassSpec::wheel(f.n);
    if (f.cls == "complete") return GraphClassSpec::complete(f.n);
    if (f.cls == "complete-bipartite") return GraphClassSpec::complete_bipartite(f.p, f.q);
    if (f.cls == "grid") return GraphClassSpec::grid(f.rows, f.cols);
    if (f.cls == "apollonian-spine") return GraphClassSpec::apollonian_spine(f.n);
    if (f.cls == "apollonian-random") return GraphClassSpec::apollonian_random(f.n, f.seed);
    if (f.cls == "named") {
        const auto id = named_id_from_string(f.id);
        if (!id) throw std::invalid_argument("unknown named id: '" + f.id + "'");
        return GraphClassSpec::named(*id);
    }
    throw std::invalid_argument("unknown graph class: '" + f.cls + "'");
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

Objective parse_objective(const std::string& s) {
    if (s == "min") return Objective::minimize;
    if (s == "max") return Objective::maximize;
    throw std::invalid_argument("objective must be min or max, got '" + s + "'");
}

const char* objective_name(Objective o) { return o == Objective::minimize ? "min" : "max"; }

const char* method_name(SolveMethod m) {
    switch (m) {
        case SolveMethod::brute: return "brute";
        case SolveMethod::bnb: return "bnb";
        case SolveMethod::local: return "local";
    }
    return "?";
}

std::vector<int> witness_values(const Numbering& pi) {
    std::vector<int> values(static_cast<std::size_t>(pi.size()));
    for (int v = 1; v <= pi.size(); ++v) values[static_cast<std::size_t>(v) - 1] = pi.of(v);
    return values;
}

ordered_json solve_record(const std::string& input, const SolveResult& r) {
    ordered_json j;
    j["command"] = "solve";
    j["input"] = input;
    j["objective"] = objective_name(r.objective);
    j["method"] = method_name(r.method);
    j["value"] = r.value;
    j["witness"] = witness_values(r.witness);
    j["proven"] = r.stats.proven;
    j["nodes"] = r.stats.nodes;
    j["elapsed_ms"] = r.stats.elapsed_ms;
    return j;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream ss(s);
    while (std::getline(ss, item, ','))
        if (!item.empty()) parts.push_back(item);
    return parts;
}

const char* status_name(RowStatus s) {
    switch (s) {
        case RowStatus::ok: return "ok";
        case RowStatus::resolved: return "resolved";
        case RowStatus::mismatch: return "MISMATCH";
        case RowStatus::skipped: return "skipped";
    }
    return "?";
}

std::string formula_cell(const VerifyRow& row) {
    if (!row.formula) return "-";
    if (row.bound_only) return "<=" + std::to_string(*row.formula);
    if (row.candidates.size() > 1) {
        std::string s;
        for (std::size_t i = 0; i < row.candidates.size(); ++i) {
            if (i) s += "|";
            s += std::to_string(row.candidates[i]);
        }
        return s;
    }
    return std::to_string(*row.formula);
}

std::string opt_cell(const std::optional<Count>& v) {
    return v ? std::to_string(*v) : std::string("-");
}

void print_verify_table(const std::vector<VerifyRow>& rows) {
    std::size_t label_w = 8;
    for (const auto& row : rows) label_w = std::max(label_w, row.spec.label().size());
    std::cout << std::left << std::setw(static_cast<int>(label_w) + 2) << "instance"
              << std::setw(5) << "obj" << std::setw(10) << "formula" << std::setw(11)
              << "construct" << std::setw(8) << "solver" << std::setw(10) << "status"
              << "note\n";
    int ok = 0, resolved = 0, skipped = 0, mismatches = 0;
    for (const auto& row : rows) {
        switch (row.status) {
            case RowStatus::ok: ++ok; break;
            case RowStatus::resolved: ++resolved; break;
            case RowStatus::skipped: ++skipped; break;
            case RowStatus::mismatch: ++mismatches; break;
        }
        std::cout << std::left << std::setw(static_cast<int>(label_w) + 2) << row.spec.label()
                  << std::setw(5) << objective_name(row.objective) << std::setw(10)
                  << formula_cell(row) << std::setw(11) << opt_cell(row.constructive)
                  << std::setw(8) << opt_cell(row.solver) << std::setw(10)
                  << status_name(row.status) << row.note << "\n";
    }
    std::cout << rows.size() << " rows: " << ok << " ok, " << resolved << " resolved, "
              << skipped << " skipped, " << mismatches << " mismatched\n";
}

void print_verify_json(const std::vector<VerifyRow>& rows) {
    for (const auto& row : rows) {
        ordered_json j;
        j["instance"] = row.spec.label();
        j["objective"] = objective_name(row.objective);
        if (row.formula)
            j["formula"] = *row.formula;
        else
            j["formula"] = nullptr;
        j["candidates"] = row.candidates;
        j["bound_only"] = row.bound_only;
        j["flagged"] = row.flagged;
        if (row.constructive)
            j["construction"] = *row.constructive;
        else
            j["construction"] = nullptr;
        if (row.solver)
            j["solver"] = *row.solver;
        else
            j["solver"] = nullptr;
        j["status"] = status_name(row.status);
        j["note"] = row.note;
        std::cout << j.dump() << "\n";
    }
}

int run_gen(const SpecFlags& flags, const std::string& out_path) {
    const Graph g = generate(to_spec(flags));
    emit(out_path, graph_to_string(g));
    return 0;
}

int run_count(const std::string& graph_path, const std::string& numbering_path, bool list) {
    const Graph g = load_graph(graph_path);
    const Numbering pi = load_numbering(numbering_path);
    const auto report = count_validity(g, pi, list);
    std::ostringstream out;
    out << report.count << "\n";
    if (list && report.paths)
        for (const auto& p : *report.paths)
            out << p.end_lo << " " << p.middle << " " << p.end_hi << "\n";
    std::cout << out.str();
    return 0;
}

int run_solve(const std::string& graph_path, const std::string& objective,
              const std::string& method, const SolveOptions& opts, std::uint64_t seed) {
    const Graph g = load_graph(graph_path);
    const Objective obj = parse_objective(objective);
    SolveResult result;
    if (method == "brute") {
        result = solve_brute(g, obj, opts);
    } else if (method == "bnb") {
        result = solve_bnb(g, obj, opts);
    } else if (method == "local") {
        LocalSearchOptions ls;
        ls.seed = seed;
        ls.threads = opts.threads;
        result = local_search(g, greedy_start(g, obj), obj, ls);
    } else {
        throw std::invalid_argument("method must be brute, bnb or local, got '" + method + "'");
    }
    std::cout << solve_record(graph_hash(g), result).dump() << "\n";
    return 0;
}

int run_decide(const std::string& graph_path, Count k, const std::string& direction,
               bool print_witness, const SolveOptions& opts) {
    DecisionQuery q;
    q.graph = load_graph(graph_path);
    q.k = k;
    if (direction == "at-most")
        q.direction = Direction::at_most;
    else if (direction == "at-least")
        q.direction = Direction::at_least;
    else
        throw std::invalid_argument("direction must be at-most or at-least, got '" + direction +
                                    "'");
    const DecisionResult result = decide(q, opts);
    if (result.yes) {
        std::cout << "YES\n";
        if (print_witness && result.witness) std::cout << numbering_to_string(*result.witness);
        return 0;
    }
    if (result.stats.proven) {
        std::cout << "NO\n";
        return 1;
    }
    std::cerr << "undecided: node budget exhausted before the search completed\n";
    return 2;
}

int run_verify(const std::string& classes, int n_min, int n_max, bool json,
               const SolveOptions& opts) {
    const auto rows = verify_classes(split_csv(classes), n_min, n_max, opts);
    if (json)
        print_verify_json(rows);
    else
        print_verify_table(rows);
    for (const auto& row : rows)
        if (row.status == RowStatus::mismatch) return 1;
    return 0;
}

int run_construct(const SpecFlags& flags, const std::string& objective,
                  const std::string& out_path) {
    const GraphClassSpec spec = to_spec(flags);
    const Objective obj = parse_objective(objective);
    Graph g;
    std::optional<DimpleTrace> trace;
    if (spec.cls == GraphClass::apollonian_spine && spec.n >= 4) {
        auto built = make_apollonian_spine(spec.n);
        g = std::move(built.first);
        trace = std::move(built.second);
    } else if (spec.cls == GraphClass::apollonian_random && spec.n >= 4) {
        auto built = make_apollonian_random(spec.n, spec.seed);
        g = std::move(built.first);
        trace = std::move(built.second);
    } else {
        g = generate(spec);
    }
    const auto pi = class_construction(spec, g, trace, obj);
    if (!pi)
        throw std::invalid_argument("no optimal construction is claimed for " + spec.label() +
                                    " " + objective);
    std::ostringstream out;
    out << numbering_to_string(*pi);
    out << "# value = " << count_validity(g, *pi).count << "\n";
    emit(out_path, out.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"valid 2-path numbering toolkit: generators, exact solvers and "
                 "closed-form cross-checks"};
    app.require_subcommand(1);
    int rc = 0;

    SpecFlags gen_flags;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "generate a graph file");
    add_spec_flags(gen, gen_flags);
    gen->add_option("-o,--output", gen_out, "write to a file instead of stdout");
    gen->callback([&] { rc = run_gen(gen_flags, gen_out); });

    std::string count_graph, count_numbering;
    bool count_list = false;
    auto* count = app.add_subcommand("count", "count the valid 2-paths of a numbering");
    count->add_option("graph", count_graph, "graph file")->required();
    count->add_option("numbering", count_numbering, "numbering file")->required();
    count->add_flag("--list", count_list, "also print every valid path as 'x u y'");
    count->callback([&] { rc = run_count(count_graph, count_numbering, count_list); });

    std::string solve_graph, solve_objective = "min", solve_method = "bnb";
    SolveOptions solve_opts;
    std::uint64_t solve_seed = 0;
    auto* solve = app.add_subcommand("solve", "optimize a numbering, exactly or heuristically");
    solve->add_option("graph", solve_graph, "graph file")->required();
    solve->add_option("--objective", solve_objective, "min or max");
    solve->add_option("--method", solve_method, "brute, bnb or local");
    solve->add_option("--budget", solve_opts.node_budget,
                      "search node budget (default: VPATH_NODE_BUDGET or 1e8)");
    solve->add_option("--time-limit-ms", solve_opts.time_limit_ms,
                      "wall-clock cutoff; leaves determinism guarantees void");
    solve->add_option("--threads", solve_opts.threads, "worker threads");
    solve->add_option("--cap", solve_opts.brute_cap, "vertex cap for --method brute");
    solve->add_flag("--fix-first", solve_opts.fix_first,
                    "pin number 1 to vertex 1 (sound only for vertex-transitive graphs)");
    solve->add_option("--seed", solve_seed, "shuffle seed for --method local");
    solve->callback(
        [&] { rc = run_solve(solve_graph, solve_objective, solve_method, solve_opts, solve_seed); });

    std::string decide_graph, decide_direction = "at-most";
    Count decide_k = 0;
    bool decide_witness = false;
    SolveOptions decide_opts;
    auto* dec = app.add_subcommand("decide", "is there a numbering with at most / at least k "
                                            "valid paths? exit 0 yes, 1 no, 2 error");
    dec->add_option("graph", decide_graph, "graph file")->required();
    dec->add_option("-k", decide_k, "threshold")->required();
    dec->add_option("--direction", decide_direction, "at-most or at-least");
    dec->add_flag("--witness", decide_witness, "print a witness numbering on YES");
    dec->add_option("--budget", decide_opts.node_budget, "search node budget");
    dec->add_option("--threads", decide_opts.threads, "worker threads");
    dec->callback([&] {
        rc = run_decide(decide_graph, decide_k, decide_direction, decide_witness, decide_opts);
    });

    std::string verify_classes_csv = "paths,cycles,stars,wheels,bipartite,complete,apollonian,grids";
    int verify_n_min = 3, verify_n_max = 8;
    bool verify_json = false;
    SolveOptions verify_opts;
    auto* verify = app.add_subcommand(
        "verify", "formula / construction / solver agreement matrix over the graph classes");
    verify->add_option("--classes", verify_classes_csv, "comma-separated class list");
    verify->add_option("--n-min", verify_n_min, "smallest size");
    verify->add_option("--n-max", verify_n_max, "largest size");
    verify->add_flag("--json", verify_json, "one machine-readable record per row");
    verify->add_option("--cap", verify_opts.brute_cap,
                       "solver vertex cap; larger instances are marked skipped");
    verify->add_option("--threads", verify_opts.threads, "worker threads");
    verify->callback([&] {
        rc = run_verify(verify_classes_csv, verify_n_min, verify_n_max, verify_json, verify_opts);
    });

    SpecFlags construct_flags;
    std::string construct_objective = "min", construct_out;
    auto* construct =
        app.add_subcommand("construct", "emit a provably optimal numbering for a graph class");
    add_spec_flags(construct, construct_flags);
    construct->add_option("--objective", construct_objective, "min or max");
    construct->add_option("-o,--output", construct_out, "write to a file instead of stdout");
    construct->callback(
        [&] { rc = run_construct(construct_flags, construct_objective, construct_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
