#pragma once

#include <utility>

#include "gci/engine.hpp"
#include "gci/protocol.hpp"

namespace gci {

// lf 0 = phi (non-marked), 1 = phi' (marked), 2 = l' (central-agent
// candidate), i+1 = L_i for 2 <= i <= n-1 (central agent that has counted i
// neighbors). star: 0 = yes, 1 = no, 2 = never.
struct SIState {
    int lf;
    int star;
};

inline constexpr int si_star_yes = 0;
inline constexpr int si_star_no = 1;
inline constexpr int si_star_never = 2;

int si_encode(SIState s);
SIState si_decode(int id);

// Star identification with knowledge of n, 3n+3 states, orientation-symmetric
// (weak-fairness compatible). For n <= 2 returns a one-state all-yes protocol.
Protocol star_id(int n);

// (sum of counted neighbors, #phi' + #L); equal in every reachable
// configuration.
std::pair<int, int> si_conservation(const Configuration& c);

} // namespace gci
