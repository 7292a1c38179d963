#include "gci/impossibility.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "gci/rng.hpp"
#include "gci/scheduler.hpp"

namespace gci {

namespace {

void apply(const Protocol& p, Configuration& c, const Interaction& it) {
    const auto [a, b] = p.delta(c[it.initiator], c[it.responder]);
    c[it.initiator] = a;
    c[it.responder] = b;
}

std::string pack(const Configuration& c) {
    std::string key(c.size() * 2, '\0');
    for (size_t i = 0; i < c.size(); ++i) {
        key[2 * i] = static_cast<char>(c[i] & 0xff);
        key[2 * i + 1] = static_cast<char>((c[i] >> 8) & 0xff);
    }
    return key;
}

// Full-length scripted replay: convergence detection is disabled so every
// scripted interaction is applied, and the end-of-script verdict fires.
Trace replay_script(const Protocol& p, const Graph& g, const std::vector<Interaction>& script,
                    const RunOptions& base_opt = {}) {
    auto sched = make_script_scheduler(script);
    RunOptions opt = base_opt;
    opt.max_steps = static_cast<int64_t>(script.size()) + 1;
    opt.window = opt.max_steps + 1;
    return run(p, g, *sched, opt);
}

} // namespace

DoubledGraph double_graph(const Graph& g) {
    const int n = g.n;
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges) {
        edges.emplace_back(u, v);
        edges.emplace_back(u + n, v + n);
        if (u == 0) {
            edges.emplace_back(0, v + n);
            edges.emplace_back(n, v);
        }
    }
    return {g, Graph::from_edges(2 * n, std::move(edges)), 0};
}

DoubledExecution build_doubled_execution(const Protocol& p, const Graph& g,
                                         int64_t segment_count, int64_t sweep_budget) {
    if (segment_count < 1) throw std::invalid_argument("segment_count must be positive");
    if (g.edge_count() == 0) throw std::invalid_argument("doubling needs at least one edge");

    DoubledExecution ex;
    ex.graphs = double_graph(g);
    const int n = g.n;
    const int64_t m2 = 2 * g.edge_count();

    std::vector<Interaction> sweep;
    for (const auto& [u, v] : g.edges) {
        sweep.push_back({u, v});
        sweep.push_back({v, u});
    }

    // locate the recurring sweep boundary of the round-robin run
    std::vector<Configuration> boundary_by_sweep{initial_configuration(p, g)};
    std::unordered_map<std::string, int64_t> seen{{pack(boundary_by_sweep[0]), 0}};
    Configuration cur = boundary_by_sweep[0];
    int64_t t0 = -1, period = -1;
    for (int64_t s = 1; s <= sweep_budget && period < 0; ++s) {
        for (const auto& it : sweep) apply(p, cur, it);
        boundary_by_sweep.push_back(cur);
        const auto [pos, inserted] = seen.emplace(pack(cur), s);
        if (!inserted) {
            t0 = pos->second;
            period = s - t0;
        }
    }
    if (period < 0)
        throw std::runtime_error("no recurring sweep boundary within " +
                                 std::to_string(sweep_budget) + " sweeps");
    ex.prefix_sweeps = t0;
    ex.period_sweeps = period;
    ex.segments = segment_count;
    const Configuration recurring = boundary_by_sweep[t0];

    // base round-robin trace covering the prefix plus all segments
    const int64_t base_steps = (t0 + segment_count * period) * m2;
    {
        auto rr = make_scheduler("rr");
        RunOptions opt;
        opt.max_steps = std::max<int64_t>(base_steps, 1);
        opt.window = opt.max_steps + 1;
        ex.base_trace = run(p, g, *rr, opt);
    }

    // copy-1/copy-2 blocks; odd segments substitute the pivot across copies
    const auto shifted = [n](Interaction it) {
        return Interaction{it.initiator + n, it.responder + n};
    };
    const auto pivot_to_copy2 = [n](Interaction it) {
        if (it.initiator == 0) it.initiator = n;
        if (it.responder == 0) it.responder = n;
        return it;
    };
    const auto pivot_to_copy1 = [n](Interaction it) {
        if (it.initiator != 0) it.initiator += n;
        if (it.responder != 0) it.responder += n;
        return it;
    };

    std::vector<Interaction>& script = ex.script;
    for (int64_t s = 0; s < t0; ++s)
        for (const auto& it : sweep) script.push_back(it);
    for (int64_t s = 0; s < t0; ++s)
        for (const auto& it : sweep) script.push_back(shifted(it));
    std::vector<int64_t> boundary_steps{static_cast<int64_t>(script.size())};
    for (int64_t seg = 1; seg <= segment_count; ++seg) {
        const bool odd = seg % 2 == 1;
        for (int64_t s = 0; s < period; ++s)
            for (const auto& it : sweep) script.push_back(odd ? pivot_to_copy2(it) : it);
        for (int64_t s = 0; s < period; ++s)
            for (const auto& it : sweep) script.push_back(odd ? pivot_to_copy1(it) : shifted(it));
        boundary_steps.push_back(static_cast<int64_t>(script.size()));
    }
    ex.fairness_period = 4 * period * m2;

    std::vector<Configuration> at_boundary;
    {
        RunOptions opt;
        size_t want = boundary_steps[0] == 0 ? 1 : 0; // an empty prefix ends at step 0
        opt.observer = [&](int64_t i, const Interaction&, const Configuration& c) {
            while (want < boundary_steps.size() && boundary_steps[want] == i) {
                at_boundary.push_back(c);
                ++want;
            }
        };
        ex.doubled_trace = replay_script(p, ex.graphs.doubled, script, opt);
        if (boundary_steps[0] == 0)
            at_boundary.insert(at_boundary.begin(), ex.doubled_trace.initial);
    }

    for (const auto& d : at_boundary) {
        ++ex.witness.checks;
        bool ok = true;
        for (int x = 0; x < n; ++x)
            ok = ok && d[x] == recurring[x] && d[x + n] == recurring[x];
        if (!ok) ++ex.witness.violations;
        ex.witness.pairs.emplace_back(recurring, d);
        char val = 0;
        if (!outputs_uniform(p, d, &val)) {
            ex.boundary_outputs_uniform = false;
        } else if (ex.witness.checks == 1) {
            ex.boundary_output = val;
        } else if (val != ex.boundary_output) {
            ex.boundary_outputs_uniform = false;
        }
    }
    if (at_boundary.size() != boundary_steps.size()) ++ex.witness.violations;
    return ex;
}

namespace {

// Alternating-initiator sequence on one edge, recording the state pair after
// every transition; the caller picks which positions are candidates.
template <typename Visit>
void walk_alternating(const Protocol& p, int64_t limit, Visit visit) {
    int a = p.initial, b = p.initial;
    for (int64_t t = 1; t <= limit; ++t) {
        if (t % 2 == 1) {
            const auto [x, y] = p.delta(a, b);
            a = x;
            b = y;
        } else {
            const auto [y, x] = p.delta(b, a);
            b = y;
            a = x;
        }
        if (visit(t, a, b)) return;
    }
    throw std::logic_error("alternating sequence did not repeat within the pigeonhole bound");
}

// Repeat with both positions even, so a phase replay always starts with the
// sa-holder initiating and spans at least two interactions.
PumpPair find_aligned_pump(const Protocol& p) {
    PumpPair out;
    std::map<std::pair<int, int>, int64_t> seen{{{p.initial, p.initial}, 0}};
    const int64_t q2 = static_cast<int64_t>(p.state_count) * p.state_count;
    bool found = false;
    walk_alternating(p, 2 * (q2 + 1), [&](int64_t t, int a, int b) {
        if (t % 2 != 0) return false;
        const auto [pos, inserted] = seen.emplace(std::make_pair(a, b), t);
        if (inserted) return false;
        out = {a, b, pos->second, t};
        found = true;
        return true;
    });
    if (!found) throw std::logic_error("even-aligned repeat not found");
    return out;
}

// Transitions first..last of the alternating sequence, replayed on the edge
// (x, y): odd positions have x initiate, even positions y.
void emit_leg(int x, int y, int64_t first, int64_t last, std::vector<Interaction>& out) {
    for (int64_t t = first; t <= last; ++t)
        out.push_back(t % 2 == 1 ? Interaction{x, y} : Interaction{y, x});
}

PhasedExecution build_phased(const Protocol& p, Graph graph, const PumpPair& pump,
                             const std::vector<std::pair<int, int>>& rotation,
                             int64_t rotations) {
    PhasedExecution ex;
    ex.graph = std::move(graph);
    const int64_t cycle = pump.j - pump.i;
    ex.period = cycle * static_cast<int64_t>(rotation.size());

    // two opening legs take (v1,v2) and (v3,v4) from the initial pair to
    // (sa,sb); every later phase returns one pair there
    emit_leg(0, 1, 1, pump.i, ex.script);
    emit_leg(2, 3, 1, pump.i, ex.script);
    std::vector<int64_t> boundary_steps{static_cast<int64_t>(ex.script.size())};
    for (int64_t r = 0; r < rotations; ++r) {
        for (const auto& [x, y] : rotation) {
            emit_leg(x, y, pump.i + 1, pump.j, ex.script);
            boundary_steps.push_back(static_cast<int64_t>(ex.script.size()));
            ++ex.phase_count;
        }
    }

    RunOptions opt;
    size_t want = boundary_steps[0] == 0 ? 1 : 0; // empty opening legs end at step 0
    opt.observer = [&](int64_t i, const Interaction&, const Configuration& c) {
        while (want < boundary_steps.size() && boundary_steps[want] == i) {
            ex.phase_boundaries.push_back(c);
            ++want;
        }
    };
    ex.trace = replay_script(p, ex.graph, ex.script, opt);
    if (boundary_steps[0] == 0)
        ex.phase_boundaries.insert(ex.phase_boundaries.begin(), ex.trace.initial);

    for (const auto& c : ex.phase_boundaries) {
        if (c != ex.phase_boundaries.front()) ex.boundaries_periodic = false;
        char val = 0;
        if (!outputs_uniform(p, c, &val)) {
            ex.boundary_outputs_uniform = false;
        } else if (&c == &ex.phase_boundaries.front()) {
            ex.boundary_output = val;
        } else if (val != ex.boundary_output) {
            ex.boundary_outputs_uniform = false;
        }
    }
    return ex;
}

} // namespace

PumpPair find_pump_pair(const Protocol& p) {
    PumpPair out;
    std::map<std::pair<int, int>, int64_t> seen;
    const int64_t q2 = static_cast<int64_t>(p.state_count) * p.state_count;
    bool found = false;
    walk_alternating(p, q2 + 1, [&](int64_t t, int a, int b) {
        const auto [pos, inserted] = seen.emplace(std::make_pair(a, b), t);
        if (inserted) return false;
        out = {a, b, pos->second, t};
        found = true;
        return true;
    });
    if (!found) throw std::logic_error("state pair did not repeat within the pigeonhole bound");
    return out;
}

LineRingExecutions build_line_ring_executions(const Protocol& p, int64_t rotations) {
    if (rotations < 2) throw std::invalid_argument("need at least two rotations");
    LineRingExecutions ex;
    ex.pump = find_aligned_pump(p);
    ex.line = build_phased(p, line_graph(4), ex.pump, {{2, 3}, {0, 1}, {2, 1}}, rotations);
    ex.ring = build_phased(p, ring_graph(4), ex.pump, {{2, 3}, {0, 3}, {0, 1}, {2, 1}}, rotations);
    return ex;
}

BipartiteTriple build_bipartite_triple() {
    BipartiteTriple t;
    t.g = complete_graph(3);
    t.g_prime = Graph::from_edges(6, {{0, 1}, {1, 5}, {3, 5}, {3, 4}, {2, 4}, {0, 2}});
    t.g_dprime = double_graph(t.g).doubled;
    return t;
}

TriangleRingExecution build_triangle_to_ring_execution(const Protocol& p, int64_t steps) {
    if (steps < 1) throw std::invalid_argument("steps must be positive");
    TriangleRingExecution ex;
    ex.triangle = complete_graph(3);
    ex.ring6 = build_bipartite_triple().g_prime;

    {
        auto rr = make_scheduler("rr");
        RunOptions opt;
        opt.max_steps = steps;
        opt.window = steps + 1;
        ex.triangle_trace = run(p, ex.triangle, *rr, opt);
    }

    // pivot interactions replay within each copy, non-pivot ones cross
    for (const auto& s : ex.triangle_trace.steps) {
        const int x = s.inter.initiator, y = s.inter.responder;
        if (x == 0 || y == 0) {
            ex.script.push_back({x, y});
            ex.script.push_back({x + 3, y + 3});
        } else {
            ex.script.push_back({x, y + 3});
            ex.script.push_back({x + 3, y});
        }
    }

    std::vector<Configuration> base_after(steps + 1);
    base_after[0] = ex.triangle_trace.initial;
    for (int64_t k = 0; k < steps; ++k) {
        base_after[k + 1] = base_after[k];
        const auto& s = ex.triangle_trace.steps[k];
        base_after[k + 1][s.inter.initiator] = s.init_after;
        base_after[k + 1][s.inter.responder] = s.resp_after;
    }

    RunOptions opt;
    opt.observer = [&](int64_t i, const Interaction&, const Configuration& c) {
        if (i % 2 != 0) return;
        const Configuration& b = base_after[i / 2];
        ++ex.witness.checks;
        bool ok = true;
        for (int v = 0; v < 3; ++v) ok = ok && c[v] == b[v] && c[v + 3] == b[v];
        if (!ok) ++ex.witness.violations;
        ex.witness.pairs.emplace_back(b, c);
    };
    ex.ring_trace = replay_script(p, ex.ring6, ex.script, opt);
    return ex;
}

EdgeRemovalReport edge_removal_counterexample(const Protocol& p, const Graph& g,
                                              std::pair<int, int> edge, uint64_t seed,
                                              int64_t max_steps, int64_t cap) {
    EdgeRemovalReport r;
    r.base = g;
    r.reduced = del_edge(g, edge.first, edge.second);

    // full-horizon rounds until the configuration is provably stable
    Configuration c;
    char out = 0;
    bool stable = false;
    for (int round = 0; round < 8 && !stable; ++round) {
        auto sched = make_scheduler("random:" + std::to_string(mix_seed(seed, round)));
        RunOptions opt;
        opt.max_steps = max_steps;
        opt.window = max_steps;
        opt.record_steps = false;
        opt.sample_outputs = false;
        if (!c.empty()) opt.start = c;
        const Trace t = run(p, g, *sched, opt);
        r.base_steps += t.step_count;
        c = t.final_config;
        if (outputs_uniform(p, c, &out)) stable = is_stable_configuration(p, g, c, cap);
    }
    if (!stable)
        throw std::runtime_error("no stable configuration reached on the base graph");
    r.converged_output = out;
    r.base_config_stable = true;
    r.carried = c;

    const ReachableSet rs = enumerate_reachable(p, r.reduced, c, cap);
    r.reachable_count = static_cast<int64_t>(rs.configs.size());
    r.outputs_preserved = true;
    for (const auto& cfg : rs.configs) {
        char got = 0;
        if (!outputs_uniform(p, cfg, &got) || got != out) {
            r.outputs_preserved = false;
            break;
        }
    }
    r.base_is_tree = is_tree(r.base);
    r.reduced_is_tree = is_tree(r.reduced);
    r.base_is_star = is_star(r.base);
    r.reduced_is_star = is_star(r.reduced);
    return r;
}

} // namespace gci
