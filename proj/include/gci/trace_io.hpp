#pragma once

#include <string>
#include <vector>

#include "gci/engine.hpp"
#include "gci/graph.hpp"
#include "gci/protocol.hpp"

namespace gci {

// {"protocol", "params", "graph", "scheduler", "seed", "steps":
//  [{"i", "init", "resp", "after": {agent: state}}], "outputs", "verdict"}
std::string trace_to_json(const Trace& t);
void write_trace_file(const Trace& t, const std::string& path);

// Script files: JSON list of [initiator, responder] pairs.
std::vector<Interaction> parse_script(const std::string& text);
std::string script_to_json(const std::vector<Interaction>& script);
std::vector<Interaction> load_script_file(const std::string& path);
void write_script_file(const std::vector<Interaction>& script, const std::string& path);

// Re-applies the trace's interactions from its initial configuration and
// checks every recorded state; true iff they all match.
bool replay_trace(const Protocol& p, const Graph& g, const Trace& t);

} // namespace gci
