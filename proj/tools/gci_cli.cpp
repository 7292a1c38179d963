#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gci/engine.hpp"
#include "gci/graph.hpp"
#include "gci/impossibility.hpp"
#include "gci/protocol.hpp"
#include "gci/scheduler.hpp"
#include "gci/sweep.hpp"
#include "gci/trace_io.hpp"

using namespace gci;

namespace {

// exit codes: 0 pass/converged, 1 usage, 2 timeout/mismatch/failed check,
// 3 cap or construction budget exceeded
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kMismatch = 2;
constexpr int kBudget = 3;

std::string output_summary(const std::vector<char>& outputs) {
    int64_t yes = 0;
    for (char o : outputs) yes += o ? 1 : 0;
    const int64_t no = static_cast<int64_t>(outputs.size()) - yes;
    std::string s = "yes=" + std::to_string(yes) + " no=" + std::to_string(no);
    if (no == 0) s += " (uniform yes)";
    else if (yes == 0) s += " (uniform no)";
    return s;
}

void write_text(const std::string& text, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
}

struct RunArgs {
    std::string protocol;
    std::string graph;
    std::string scheduler = "random:1";
    int64_t max_steps = 1'000'000;
    int64_t window = 0;
    std::string out;
    bool emit_trace = false;
};

int cmd_run(const RunArgs& a) {
    if (a.window > a.max_steps)
        throw CLI::ValidationError("--window must not exceed --max-steps");
    const Protocol p = parse_protocol_spec(a.protocol);
    const Graph g = parse_graph_spec(a.graph);
    auto sched = make_scheduler(a.scheduler);

    RunOptions opt;
    opt.max_steps = a.max_steps;
    opt.window = a.window;
    opt.record_steps = a.emit_trace;
    Trace t = run(p, g, *sched, opt);
    t.graph_spec = a.graph;

    std::cout << "verdict: " << verdict_string(t.verdict) << "\n"
              << "steps: " << t.step_count << "\n"
              << "outputs: " << output_summary(outputs_of(p, t.final_config)) << "\n";
    if (a.emit_trace) {
        const std::string path = a.out.empty() ? "trace.json" : a.out;
        write_trace_file(t, path);
        std::cout << "trace: " << path << "\n";
    }
    return t.verdict == Verdict::timeout ? kMismatch : kOk;
}

struct CheckArgs {
    std::string protocol;
    std::string graph;
    int64_t cap = 10'000'000;
};

int cmd_check_stable(const CheckArgs& a) {
    const Protocol p = parse_protocol_spec(a.protocol);
    const Graph g = parse_graph_spec(a.graph);
    const StabilityReport r = check_stable(p, g, a.cap);
    const bool expected = protocol_oracle(p, g);

    std::cout << "reachable: " << r.reachable_count << "\n"
              << "verdict: " << stability_verdict_string(r.verdict) << "\n";
    for (const auto& scc : r.bottom_sccs)
        std::cout << "bottom-scc: size=" << scc.size << " kind=" << scc.kind << "\n";
    if (!r.witnesses.empty())
        std::cout << "witnesses: " << r.witnesses.size() << "\n";
    std::cout << "oracle: " << (expected ? "yes" : "no") << "\n";

    const bool match =
        r.verdict == (expected ? StabilityVerdict::all_yes_stable
                               : StabilityVerdict::all_no_stable);
    std::cout << "match: " << (match ? "yes" : "no") << "\n";
    return match ? kOk : kMismatch;
}

struct ImpossibilityArgs {
    std::string kind;
    std::string protocol = "tree-id";
    std::string graph = "line:3";
    std::string edge = "0:1";
    int64_t segments = 100;
    int64_t rotations = 25;
    int64_t steps = 10'000;
    int64_t max_steps = 1'000'000;
    int64_t cap = 10'000'000;
    uint64_t seed = 1;
    std::string out;
};

bool zero_debt_slices(const Graph& g, const std::vector<Interaction>& script,
                      int64_t start, int64_t period, int64_t count) {
    for (int64_t k = 0; k < count; ++k) {
        const auto first = script.begin() + start + k * period;
        if (!fairness_audit(g, std::vector<Interaction>(first, first + period)).zero_debt())
            return false;
    }
    return true;
}

nlohmann::ordered_json witness_sample(const EquivalenceWitness& w) {
    nlohmann::ordered_json sample = nlohmann::ordered_json::array();
    for (size_t i = 0; i < w.pairs.size() && i < 2; ++i)
        sample.push_back({{"base", w.pairs[i].first}, {"derived", w.pairs[i].second}});
    return sample;
}

int cmd_impossibility(const ImpossibilityArgs& a) {
    const Protocol p = parse_protocol_spec(a.protocol);
    nlohmann::ordered_json report;
    report["kind"] = a.kind;
    report["protocol"] = a.protocol;
    bool pass = false;

    if (a.kind == "weak-double") {
        const Graph base = parse_graph_spec(a.graph);
        const DoubledExecution ex = build_doubled_execution(p, base, a.segments);
        const int64_t pairs = a.segments / 2;
        const bool debt_free = zero_debt_slices(
            ex.graphs.doubled, ex.script,
            2 * ex.prefix_sweeps * 2 * base.edge_count(), ex.fairness_period, pairs);
        pass = ex.witness.holds() && ex.boundary_outputs_uniform && debt_free;
        std::cout << "base: " << a.graph << " (tree: " << (is_tree(base) ? "yes" : "no")
                  << "), doubled n=" << ex.graphs.doubled.n
                  << " (tree: " << (is_tree(ex.graphs.doubled) ? "yes" : "no") << ")\n"
                  << "prefix sweeps: " << ex.prefix_sweeps
                  << ", period sweeps: " << ex.period_sweeps << ", segments: "
                  << ex.segments << "\n"
                  << "boundary checks: " << ex.witness.checks
                  << ", violations: " << ex.witness.violations << "\n"
                  << "boundary outputs uniform: "
                  << (ex.boundary_outputs_uniform ? "yes" : "no") << " (value "
                  << (ex.boundary_output ? "yes" : "no") << ")\n"
                  << "fairness debt per period: " << (debt_free ? "zero" : "NONZERO") << "\n";
        report["segments"] = ex.segments;
        report["prefix_sweeps"] = ex.prefix_sweeps;
        report["period_sweeps"] = ex.period_sweeps;
        report["checks"] = ex.witness.checks;
        report["violations"] = ex.witness.violations;
        report["boundary_outputs_uniform"] = ex.boundary_outputs_uniform;
        report["zero_debt"] = debt_free;
        report["witness_sample"] = witness_sample(ex.witness);
    } else if (a.kind == "line-ring") {
        const LineRingExecutions ex = build_line_ring_executions(p, a.rotations);
        const int64_t opening = 2 * ex.pump.i;
        const bool debt_free =
            zero_debt_slices(ex.line.graph, ex.line.script, opening, ex.line.period,
                             a.rotations) &&
            zero_debt_slices(ex.ring.graph, ex.ring.script, opening, ex.ring.period,
                             a.rotations);
        pass = ex.line.boundaries_periodic && ex.ring.boundaries_periodic &&
               ex.line.boundary_outputs_uniform && ex.ring.boundary_outputs_uniform &&
               ex.line.boundary_output == ex.ring.boundary_output && debt_free;
        std::cout << "pump pair: states (" << ex.pump.sa << ", " << ex.pump.sb
                  << "), positions " << ex.pump.i << " and " << ex.pump.j << "\n"
                  << "line phases: " << ex.line.phase_count
                  << ", ring phases: " << ex.ring.phase_count << "\n"
                  << "boundaries periodic: line "
                  << (ex.line.boundaries_periodic ? "yes" : "no") << ", ring "
                  << (ex.ring.boundaries_periodic ? "yes" : "no") << "\n"
                  << "boundary outputs: line "
                  << (ex.line.boundary_output ? "yes" : "no") << ", ring "
                  << (ex.ring.boundary_output ? "yes" : "no") << "\n"
                  << "fairness debt per rotation: " << (debt_free ? "zero" : "NONZERO")
                  << "\n";
        report["pump"] = {{"sa", ex.pump.sa},
                          {"sb", ex.pump.sb},
                          {"i", ex.pump.i},
                          {"j", ex.pump.j}};
        report["line_phases"] = ex.line.phase_count;
        report["ring_phases"] = ex.ring.phase_count;
        report["boundaries_periodic"] =
            ex.line.boundaries_periodic && ex.ring.boundaries_periodic;
        report["boundary_output"] = static_cast<int>(ex.line.boundary_output);
        report["zero_debt"] = debt_free;
    } else if (a.kind == "bipartite") {
        const BipartiteTriple triple = build_bipartite_triple();
        const bool oracles = !is_bipartite(triple.g) && is_bipartite(triple.g_prime) &&
                             !is_bipartite(triple.g_dprime);
        const TriangleRingExecution ex = build_triangle_to_ring_execution(p, a.steps);
        pass = oracles && ex.witness.holds();
        std::cout << "triangle bipartite: " << (is_bipartite(triple.g) ? "yes" : "no")
                  << ", 6-ring bipartite: "
                  << (is_bipartite(triple.g_prime) ? "yes" : "no")
                  << ", doubled triangle bipartite: "
                  << (is_bipartite(triple.g_dprime) ? "yes" : "no") << "\n"
                  << "mapped steps: " << ex.triangle_trace.step_count
                  << ", checks: " << ex.witness.checks
                  << ", violations: " << ex.witness.violations << "\n";
        report["oracles_pass"] = oracles;
        report["steps"] = ex.triangle_trace.step_count;
        report["checks"] = ex.witness.checks;
        report["violations"] = ex.witness.violations;
        report["witness_sample"] = witness_sample(ex.witness);
    } else if (a.kind == "arbitrary-init") {
        const Graph g = parse_graph_spec(a.graph);
        const auto colon = a.edge.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--edge must look like U:V");
        const std::pair<int, int> edge{std::stoi(a.edge.substr(0, colon)),
                                       std::stoi(a.edge.substr(colon + 1))};
        const EdgeRemovalReport r =
            edge_removal_counterexample(p, g, edge, a.seed, a.max_steps, a.cap);
        pass = r.base_config_stable && r.outputs_preserved;
        std::cout << "base: " << a.graph << " (tree: " << (r.base_is_tree ? "yes" : "no")
                  << ", star: " << (r.base_is_star ? "yes" : "no") << ")\n"
                  << "reduced (tree: " << (r.reduced_is_tree ? "yes" : "no")
                  << ", star: " << (r.reduced_is_star ? "yes" : "no") << ")\n"
                  << "converged output: " << (r.converged_output ? "yes" : "no")
                  << " after " << r.base_steps << " steps, stable: "
                  << (r.base_config_stable ? "yes" : "no") << "\n"
                  << "reachable on reduced graph: " << r.reachable_count
                  << ", outputs preserved: " << (r.outputs_preserved ? "yes" : "no")
                  << "\n";
        report["graph"] = a.graph;
        report["edge"] = {edge.first, edge.second};
        report["converged_output"] = static_cast<int>(r.converged_output);
        report["base_steps"] = r.base_steps;
        report["reachable_count"] = r.reachable_count;
        report["outputs_preserved"] = r.outputs_preserved;
        report["base_is_tree"] = r.base_is_tree;
        report["reduced_is_tree"] = r.reduced_is_tree;
    } else {
        throw CLI::ValidationError("unknown --kind: " + a.kind);
    }

    report["pass"] = pass;
    if (!a.out.empty()) write_text(report.dump(2) + "\n", a.out);
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kOk : kMismatch;
}

struct SweepArgs {
    std::string protocol;
    std::string family;
    std::string scheduler = "random";
    std::string sizes = "3..10";
    int64_t seeds = 10;
    int64_t max_steps = 1'000'000;
    int64_t window = 0;
    std::string out;
    bool serial = false;
};

std::pair<int, int> parse_sizes(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const int n = std::stoi(s);
        return {n, n};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

std::string family_spec(const std::string& family, int n, int64_t seed) {
    std::string spec = family;
    const auto plus = spec.find('+');
    std::string suffix;
    if (plus != std::string::npos) {
        suffix = spec.substr(plus);
        spec = spec.substr(0, plus);
    }
    spec += ":" + std::to_string(n);
    if (spec.rfind("tree:", 0) == 0 || spec.rfind("kregular:", 0) == 0)
        spec += ":" + std::to_string(seed);
    return spec + suffix;
}

std::string protocol_spec_for(const std::string& base, int n) {
    if (base == "star-id") return "star-id:n=" + std::to_string(n);
    std::string spec = base;
    const auto bound_2n = spec.find("bound=2n");
    if (bound_2n != std::string::npos)
        return spec.replace(bound_2n, 8, "bound=" + std::to_string(2 * n));
    const auto bound_n = spec.find("bound=n");
    if (bound_n != std::string::npos)
        return spec.replace(bound_n, 7, "bound=" + std::to_string(n));
    return spec;
}

int cmd_sweep(const SweepArgs& a) {
    const auto [lo, hi] = parse_sizes(a.sizes);
    if (lo < 1 || hi < lo) throw CLI::ValidationError("bad --sizes range");
    if (a.seeds < 1) throw CLI::ValidationError("--seeds must be positive");

    std::vector<SweepJob> jobs;
    for (int n = lo; n <= hi; ++n)
        for (int64_t seed = 1; seed <= a.seeds; ++seed) {
            SweepJob job;
            job.protocol_spec = protocol_spec_for(a.protocol, n);
            job.graph_spec = family_spec(a.family, n, seed);
            job.scheduler_spec =
                a.scheduler == "random" ? "random:" + std::to_string(seed) : a.scheduler;
            job.max_steps = a.max_steps;
            job.window = a.window;
            jobs.push_back(std::move(job));
        }

    const auto outcomes = a.serial ? run_sweep_serial(jobs) : run_sweep_parallel(jobs);
    const std::string csv = sweep_csv(outcomes);
    if (a.out.empty()) std::cout << csv;
    else write_text(csv, a.out);

    int64_t bad = 0;
    for (const auto& o : outcomes) bad += o.ok ? 0 : 1;
    std::cerr << outcomes.size() << " runs, " << bad << " contradiction(s)\n";
    return bad == 0 ? kOk : kMismatch;
}

struct GenGraphArgs {
    std::string graph;
    std::string out;
};

int cmd_gen_graph(const GenGraphArgs& a) {
    const Graph g = parse_graph_spec(a.graph);
    write_text(write_graph_file(g), a.out);
    std::cout << "wrote " << a.out << ": n=" << g.n << " m=" << g.edge_count() << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"simulate, model-check, and stress graph-class identification protocols"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run_cmd = app.add_subcommand("run", "simulate a protocol on a graph");
    run_cmd->add_option("--protocol", run_args.protocol, "protocol spec")->required();
    run_cmd->add_option("--graph", run_args.graph, "graph spec")->required();
    run_cmd->add_option("--scheduler", run_args.scheduler, "random:SEED | rr | script:PATH");
    run_cmd->add_option("--max-steps", run_args.max_steps, "step budget");
    run_cmd->add_option("--window", run_args.window, "quiescence window (0 = 50|E|)");
    run_cmd->add_option("--out", run_args.out, "trace path (with --emit-trace)");
    run_cmd->add_flag("--emit-trace", run_args.emit_trace, "write the JSON trace");

    CheckArgs check_args;
    auto* check_cmd =
        app.add_subcommand("check-stable", "exhaustive bottom-SCC stability check");
    check_cmd->add_option("--protocol", check_args.protocol, "protocol spec")->required();
    check_cmd->add_option("--graph", check_args.graph, "graph spec")->required();
    check_cmd->add_option("--cap", check_args.cap, "configuration cap");

    ImpossibilityArgs imp_args;
    auto* imp_cmd =
        app.add_subcommand("impossibility", "run an impossibility construction");
    imp_cmd->add_option("--kind", imp_args.kind,
                        "weak-double | line-ring | bipartite | arbitrary-init")
        ->required();
    imp_cmd->add_option("--protocol", imp_args.protocol, "subject protocol");
    imp_cmd->add_option("--graph", imp_args.graph, "base graph (weak-double, arbitrary-init)");
    imp_cmd->add_option("--edge", imp_args.edge, "edge U:V to remove (arbitrary-init)");
    imp_cmd->add_option("--segments", imp_args.segments, "doubled segments (weak-double)");
    imp_cmd->add_option("--rotations", imp_args.rotations, "phase rotations (line-ring)");
    imp_cmd->add_option("--steps", imp_args.steps, "mapped steps (bipartite)");
    imp_cmd->add_option("--max-steps", imp_args.max_steps, "run budget (arbitrary-init)");
    imp_cmd->add_option("--cap", imp_args.cap, "configuration cap (arbitrary-init)");
    imp_cmd->add_option("--seed", imp_args.seed, "scheduler seed (arbitrary-init)");
    imp_cmd->add_option("--out", imp_args.out, "JSON report path");

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "batch runs over sizes and seeds");
    sweep_cmd->add_option("--protocol", sweep_args.protocol,
                          "protocol spec; star-id and bound=n/2n adapt per size")
        ->required();
    sweep_cmd->add_option("--family", sweep_args.family,
                          "graph family: line ring star complete tree kregular:K, "
                          "optional +add-edge:U:V / +del-edge:U:V suffix")
        ->required();
    sweep_cmd->add_option("--scheduler", sweep_args.scheduler,
                          "rr, script:PATH, or random (per-seed)");
    sweep_cmd->add_option("--sizes", sweep_args.sizes, "size range A..B");
    sweep_cmd->add_option("--seeds", sweep_args.seeds, "seeds 1..N per size");
    sweep_cmd->add_option("--max-steps", sweep_args.max_steps, "step budget per run");
    sweep_cmd->add_option("--window", sweep_args.window, "quiescence window (0 = 50|E|)");
    sweep_cmd->add_option("--out", sweep_args.out, "CSV path (default stdout)");
    sweep_cmd->add_flag("--serial", sweep_args.serial, "use the serial reference path");

    GenGraphArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen-graph", "write a graph as an edge list");
    gen_cmd->add_option("--graph", gen_args.graph, "graph spec")->required();
    gen_cmd->add_option("--out", gen_args.out, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(run_args);
        if (check_cmd->parsed()) return cmd_check_stable(check_args);
        if (imp_cmd->parsed()) return cmd_impossibility(imp_args);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_args);
        if (gen_cmd->parsed()) return cmd_gen_graph(gen_args);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CapOverflow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return imp_cmd->parsed() ? kBudget : kUsage;
    }
    return kUsage;
}
