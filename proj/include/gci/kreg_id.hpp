#pragma once

#include "gci/engine.hpp"
#include "gci/protocol.hpp"

namespace gci {

// lf 0..k are the L_0..L_k tokens; k+1 is phi (no token), k+2 is phi'
// (marked). level ranges over 0..floor(log2 bound).
struct KRIState {
    int lf;
    int level;
    bool loc; // degree >= k confirmed locally
    bool reg; // the yes/no output
};

struct KRIEncoding {
    int k;
    int level_top; // floor(log2 bound)

    int states() const { return (k + 3) * (level_top + 1) * 4; }
    int encode(KRIState s) const;
    KRIState decode(int id) const;
    int phi() const { return k + 1; }
    int phi_marked() const { return k + 2; }
};

KRIEncoding kri_encoding(const Protocol& p);

// k-regular identification with knowledge of the agent-count bound: bound = n
// when bound_is_exact_n, otherwise an upper bound P >= n. The transition table
// depends only on floor(log2 bound); the flag is kept in params.
Protocol kreg_id(int k, int bound, bool bound_is_exact_n = false);

} // namespace gci
