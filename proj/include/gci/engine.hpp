#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gci/graph.hpp"
#include "gci/protocol.hpp"

namespace gci {

// Per-agent state ids, indexed by agent.
using Configuration = std::vector<int>;

struct Interaction {
    int initiator = -1;
    int responder = -1;
    bool operator==(const Interaction&) const = default;
};

enum class Verdict { converged_yes, converged_no, timeout };

std::string verdict_string(Verdict v);

struct TraceStep {
    int64_t index;
    Interaction inter;
    int init_after; // initiator state after the step
    int resp_after;
};

struct Trace {
    std::string protocol_name;
    std::map<std::string, long long> protocol_params;
    std::string graph_spec;
    std::string scheduler_spec;
    uint64_t seed = 0;
    Configuration initial;
    std::vector<TraceStep> steps;        // empty when recording is off
    std::vector<std::vector<char>> output_samples; // every `window` steps + final
    Verdict verdict = Verdict::timeout;
    int64_t step_count = 0;              // applied steps, recorded or not
    Configuration final_config;
};

class Scheduler;

struct RunOptions {
    int64_t max_steps = 1'000'000;
    int64_t window = 0; // 0 picks the default 50*|E|
    bool record_steps = true;
    bool sample_outputs = true;
    Configuration start; // empty picks the designated initial configuration
    // called after every applied step
    std::function<void(int64_t, const Interaction&, const Configuration&)> observer;
};

Configuration initial_configuration(const Protocol& p, const Graph& g);

// Applies delta for one interaction; only the two participants change.
Configuration step(const Protocol& p, const Graph& g, const Configuration& c,
                   const Interaction& inter);

// Runs until outputs are uniform and unchanged for `window` consecutive steps
// (converged) or until max_steps (timeout). A graph with no edges converges
// immediately. The scheduler signalling end-of-script also ends the run; the
// verdict is then judged on the outputs as they stand.
Trace run(const Protocol& p, const Graph& g, Scheduler& sched, const RunOptions& opt = {});

// Thrown when a reachability analysis would exceed its configuration cap.
struct CapOverflow : std::runtime_error {
    explicit CapOverflow(int64_t cap);
};

struct ReachableSet {
    std::vector<Configuration> configs; // [0] is the start configuration
    // successor indices, CSR layout; null self-loops are omitted
    std::vector<int64_t> succ_offset;
    std::vector<int> succ;
};

// BFS over all single-interaction successors (both orientations per edge).
ReachableSet enumerate_reachable(const Protocol& p, const Graph& g,
                                 const Configuration& from, int64_t cap = 10'000'000);

enum class StabilityVerdict { all_yes_stable, all_no_stable, not_convergent, mixed };

std::string stability_verdict_string(StabilityVerdict v);

struct BottomSCCSummary {
    int64_t size = 0;
    // "yes"/"no" when every configuration in the SCC has that uniform output,
    // else "unsettled"
    std::string kind;
    Configuration representative;
};

struct StabilityReport {
    int64_t reachable_count = 0;
    StabilityVerdict verdict = StabilityVerdict::not_convergent;
    std::vector<BottomSCCSummary> bottom_sccs;
    // present when the verdict is not all-yes/all-no: a configuration from an
    // unsettled bottom SCC, or from a dissenting one under `mixed`
    std::vector<Configuration> witnesses;
};

// Bottom-SCC analysis of the reachable digraph from the designated initial
// configuration: all-yn-stable iff every bottom SCC is uniformly yn.
StabilityReport check_stable(const Protocol& p, const Graph& g, int64_t cap = 10'000'000);

// Same analysis from an explicit start configuration.
StabilityReport check_stable_from(const Protocol& p, const Graph& g,
                                  const Configuration& from, int64_t cap = 10'000'000);

// True iff outputs are uniform in `c` and stay that way in every reachable
// configuration.
bool is_stable_configuration(const Protocol& p, const Graph& g, const Configuration& c,
                             int64_t cap = 10'000'000);

std::vector<char> outputs_of(const Protocol& p, const Configuration& c);
bool outputs_uniform(const Protocol& p, const Configuration& c, char* value = nullptr);

int64_t default_window(const Graph& g);

} // namespace gci
