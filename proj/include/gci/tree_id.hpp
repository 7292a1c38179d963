#pragma once

#include "gci/engine.hpp"
#include "gci/protocol.hpp"

namespace gci {

// Token kinds, in encoding order. Leader variants are L, Ltse, Ltsep, Lsep;
// left tokens Ll, Ltl; right tokens Lr, Ltr; Phi is no token.
enum class TIToken : int {
    L = 0,
    Ll = 1,
    Lr = 2,
    Ltse = 3,
    Ltsep = 4,
    Lsep = 5,
    Ltl = 6,
    Ltr = 7,
    Phi = 8,
};

struct TIState {
    TIToken lf;
    bool tre; // the yes/no output
};

int ti_encode(TIState s);
TIState ti_decode(int id);

// 18-state tree identification protocol; gamma = tre, all agents start
// (Lr, yes). Needs no initial knowledge.
Protocol tree_id();

struct TokenCensus {
    int count_right = 0;  // agents holding Lr or Ltr
    int count_left = 0;   // agents holding Ll or Ltl
    int count_leader = 0; // agents holding L, Ltse, Ltsep, or Lsep
    bool operator==(const TokenCensus&) const = default;
};

TokenCensus token_census(const Configuration& c);

} // namespace gci
