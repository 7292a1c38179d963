#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gci/engine.hpp"
#include "gci/graph.hpp"

namespace gci {

// Source of ordered interactions. `next` returns nullopt only for scripted
// schedulers that have run out.
class Scheduler {
  public:
    virtual ~Scheduler() = default;
    virtual std::optional<Interaction> next(const Graph& g, int64_t step_index) = 0;
    virtual std::string spec() const = 0;
    virtual uint64_t seed() const { return 0; }
};

// "random:SEED": edge uniform, then orientation uniform (each ordered pair
//   has probability 1/(2|E|));
// "rr": cycles through the sorted edge list, (u,v) then (v,u);
// "script:PATH": replays a JSON list of [initiator, responder] pairs.
std::unique_ptr<Scheduler> make_scheduler(const std::string& spec);

std::unique_ptr<Scheduler> make_script_scheduler(std::vector<Interaction> script);

struct FairnessReport {
    // occurrence count per ordered adjacent pair
    std::map<std::pair<int, int>, int64_t> counts;
    // ordered adjacent pairs that never occurred (weak-fairness debt)
    std::vector<std::pair<int, int>> missing;
    bool zero_debt() const { return missing.empty(); }
};

FairnessReport fairness_audit(const Graph& g, const std::vector<Interaction>& steps);
FairnessReport fairness_audit(const Graph& g, const Trace& trace);

} // namespace gci
