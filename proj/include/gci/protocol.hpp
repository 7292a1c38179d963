#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gci/graph.hpp"

namespace gci {

// A protocol (Q, Y, gamma, delta) as a dense transition table over state ids
// 0..state_count-1. delta is total and deterministic; gamma maps each state to
// a yes/no output. All agents start in the designated initial state.
struct Protocol {
    std::string name;
    std::map<std::string, long long> params;
    int state_count = 0;
    int initial = 0;
    // claims delta(p,q)=(p',q') => delta(q,p)=(q',p') for p != q
    bool symmetric = false;
    std::vector<std::pair<int, int>> table; // row-major: [p * state_count + q]
    std::vector<char> gamma_yes;            // per state

    std::pair<int, int> delta(int p, int q) const { return table[p * state_count + q]; }
    bool gamma(int s) const { return gamma_yes[s] != 0; }
    int initial_state(int /*agent*/, int /*n*/) const { return initial; }
};

// Structural checks: table/gamma sizes, ids in range, and the orientation
// symmetry when the protocol claims it. Throws std::logic_error on violation.
void validate_protocol(const Protocol& p);

// First (p, q) with p != q where delta(q,p) is not the mirror of delta(p,q),
// or nullopt if the table is orientation-symmetric.
std::optional<std::pair<int, int>> first_asymmetric_pair(const Protocol& p);

// Spec strings: "tree-id", "kreg-id:k=K,bound=B[,exact]", "star-id:n=N".
Protocol parse_protocol_spec(const std::string& spec);

// Graph-class oracle matching the protocol's identification target.
bool protocol_oracle(const Protocol& p, const Graph& g);

} // namespace gci
