#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gci/engine.hpp"
#include "gci/graph.hpp"
#include "gci/protocol.hpp"

namespace gci {

// Doubled graph: two copies of the base plus, for every base edge (0, z),
// cross edges (0, z+n) and (n, z). Agent 0 is the pivot.
struct DoubledGraph {
    Graph base;
    Graph doubled;
    int pivot = 0;
};

DoubledGraph double_graph(const Graph& g);

// Configuration correspondence s(v_x) = s(v'_x) = s(v'_{x+n}) checked at
// every construction checkpoint; `pairs` holds the (base, derived)
// configurations that were compared.
struct EquivalenceWitness {
    std::vector<std::pair<Configuration, Configuration>> pairs;
    int64_t checks = 0;
    int64_t violations = 0;
    bool holds() const { return checks > 0 && violations == 0; }
};

struct DoubledExecution {
    DoubledGraph graphs;
    Trace base_trace;    // round-robin on the base graph
    Trace doubled_trace; // scripted on the doubled graph
    EquivalenceWitness witness;
    int64_t prefix_sweeps = 0;   // sweeps before the recurring boundary
    int64_t period_sweeps = 0;   // sweeps per segment
    int64_t segments = 0;        // doubled segments executed
    std::vector<Interaction> script;
    // interactions per doubled segment pair (odd+even), the fairness period
    int64_t fairness_period = 0;
    bool boundary_outputs_uniform = true;
    char boundary_output = 0;
};

// Runs round-robin sweeps on g until the sweep-boundary configuration recurs,
// then emits the interleaved script on the doubled graph: segments duplicate
// into both copies block-wise, alternating the pivot swap on odd segments.
// Boundary equivalence is asserted for `segment_count` segments.
DoubledExecution build_doubled_execution(const Protocol& p, const Graph& g,
                                         int64_t segment_count, int64_t sweep_budget = 50'000);

struct PumpPair {
    int sa = 0;
    int sb = 0;
    int64_t i = 0; // first position of the repeat in the alternating sequence
    int64_t j = 0; // second position; j <= |Q|^2 + 1
};

// Iterates the two-agent alternating transition sequence from the initial
// pair and returns the first repeated (a-state, b-state) pair.
PumpPair find_pump_pair(const Protocol& p);

struct PhasedExecution {
    Graph graph;
    Trace trace;
    std::vector<Interaction> script;
    int64_t phase_count = 0;
    int64_t period = 0; // interactions per full phase rotation
    std::vector<Configuration> phase_boundaries;
    bool boundaries_periodic = true;    // equal boundaries from the second rotation on
    bool boundary_outputs_uniform = true;
    char boundary_output = 0;
};

struct LineRingExecutions {
    PumpPair pump; // even-aligned repeat used to drive the phases
    PhasedExecution line;
    PhasedExecution ring;
};

// Pumping schedules on the 4-agent line and ring: each phase drives one
// adjacent pair back to (sa, sb) with at least two interactions. Boundary
// configurations repeat exactly and the outputs equal gamma(sa) on both
// graphs.
LineRingExecutions build_line_ring_executions(const Protocol& p, int64_t rotations = 25);

struct BipartiteTriple {
    Graph g;         // triangle
    Graph g_prime;   // 6-ring on the crossed edge set
    Graph g_dprime;  // doubled triangle
};

BipartiteTriple build_bipartite_triple();

struct TriangleRingExecution {
    Graph triangle;
    Graph ring6;
    Trace triangle_trace; // round-robin
    Trace ring_trace;     // scripted
    EquivalenceWitness witness;
    std::vector<Interaction> script;
};

// Maps a round-robin triangle execution onto the 6-ring: pivot interactions
// replay in both copies, non-pivot interactions cross between them. The
// correspondence s(v_i) = s(v'_i) = s(v'_{i+3}) is asserted after every
// mapped pair.
TriangleRingExecution build_triangle_to_ring_execution(const Protocol& p, int64_t steps);

struct EdgeRemovalReport {
    Graph base;
    Graph reduced;
    char converged_output = 0;       // yn reached on the base graph
    int64_t base_steps = 0;
    bool base_config_stable = false; // exact check on the base graph
    Configuration carried;           // copied verbatim onto the reduced graph
    int64_t reachable_count = 0;
    bool outputs_preserved = false;  // every reachable output vector stays yn
    // oracle classifications, to exhibit the mismatch
    bool base_is_tree = false, reduced_is_tree = false;
    bool base_is_star = false, reduced_is_star = false;
};

// Runs the protocol on g to a stable uniform output, copies the configuration
// onto g minus one edge (arbitrary initial states), and exhaustively verifies
// that every reachable output vector stays the same.
EdgeRemovalReport edge_removal_counterexample(const Protocol& p, const Graph& g,
                                              std::pair<int, int> edge, uint64_t seed = 1,
                                              int64_t max_steps = 1'000'000,
                                              int64_t cap = 10'000'000);

} // namespace gci
