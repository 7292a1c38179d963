#include "gci/tree_id.hpp"

#include <utility>

namespace gci {

namespace {

constexpr int kTIStates = 18;

bool leader_kind(TIToken t) {
    return t == TIToken::L || t == TIToken::Ltse || t == TIToken::Ltsep ||
           t == TIToken::Lsep;
}

bool right_kind(TIToken t) { return t == TIToken::Lr || t == TIToken::Ltr; }
bool left_kind(TIToken t) { return t == TIToken::Ll || t == TIToken::Ltl; }

std::pair<TIState, TIState> ti_delta(TIState a, TIState b) {
    // The election of tokens
    if (right_kind(a.lf) && right_kind(b.lf)) {
        b.lf = TIToken::Ll;
        return {a, b};
    }
    if (left_kind(a.lf) && left_kind(b.lf)) {
        b.lf = TIToken::L;
        return {a, b};
    }
    if (leader_kind(a.lf) && leader_kind(b.lf)) {
        a.lf = TIToken::L;
        b.lf = TIToken::Phi;
        a.tre = true;
        return {a, b};
    }
    // Movement of tokens
    if (a.lf != TIToken::Phi && b.lf == TIToken::Phi) {
        if (leader_kind(a.lf)) b.tre = a.tre;
        if (a.lf == TIToken::Ltl) a.lf = TIToken::Ll;
        else if (a.lf == TIToken::Ltr) a.lf = TIToken::Lr;
        else if (a.lf == TIToken::Lsep || a.lf == TIToken::Ltsep) a.lf = TIToken::L;
        std::swap(a.lf, b.lf);
        return {a, b};
    }
    // Decision: the trial steps, in order
    if (a.lf == TIToken::L && b.lf == TIToken::Ll) {
        a.lf = TIToken::Ltl;
        b.lf = TIToken::Lsep;
        b.tre = a.tre;
        return {a, b};
    }
    if (a.lf == TIToken::Lsep && b.lf == TIToken::Lr) {
        a.lf = TIToken::Ltr;
        b.lf = TIToken::Ltse;
        b.tre = a.tre;
        return {a, b};
    }
    if (a.lf == TIToken::Ltse && b.lf == TIToken::Ltl) {
        a.lf = TIToken::Ll;
        b.lf = TIToken::Ltsep;
        b.tre = a.tre;
        return {a, b};
    }
    if (a.lf == TIToken::Ltsep && b.lf == TIToken::Ltr) {
        a.lf = TIToken::Lr;
        b.lf = TIToken::L;
        b.tre = false;
        return {a, b};
    }
    // Both agents hold tokens and nothing above matched: sync tre to the
    // leader side, drop trial modes, and exchange.
    if (a.lf != TIToken::Phi && b.lf != TIToken::Phi) {
        if (leader_kind(a.lf)) b.tre = a.tre;
        else if (leader_kind(b.lf)) a.tre = b.tre;
        auto drop_trial = [](TIState& s) {
            if (s.lf == TIToken::Ltl) s.lf = TIToken::Ll;
            if (s.lf == TIToken::Ltr) s.lf = TIToken::Lr;
            if (s.lf == TIToken::Lsep || s.lf == TIToken::Ltse || s.lf == TIToken::Ltsep)
                s.lf = TIToken::L;
        };
        drop_trial(a);
        drop_trial(b);
        std::swap(a.lf, b.lf);
        return {a, b};
    }
    return {a, b};
}

} // namespace

int ti_encode(TIState s) { return static_cast<int>(s.lf) * 2 + (s.tre ? 0 : 1); }

TIState ti_decode(int id) {
    return {static_cast<TIToken>(id / 2), id % 2 == 0};
}

Protocol tree_id() {
    Protocol p;
    p.name = "tree-id";
    p.state_count = kTIStates;
    p.initial = ti_encode({TIToken::Lr, true});
    p.symmetric = false;
    p.table.resize(kTIStates * kTIStates);
    p.gamma_yes.resize(kTIStates);
    for (int s = 0; s < kTIStates; s++) p.gamma_yes[s] = ti_decode(s).tre ? 1 : 0;
    for (int sa = 0; sa < kTIStates; sa++)
        for (int sb = 0; sb < kTIStates; sb++) {
            auto [a2, b2] = ti_delta(ti_decode(sa), ti_decode(sb));
            p.table[sa * kTIStates + sb] = {ti_encode(a2), ti_encode(b2)};
        }
    return p;
}

TokenCensus token_census(const Configuration& c) {
    TokenCensus census;
    for (int s : c) {
        TIToken t = ti_decode(s).lf;
        if (right_kind(t)) census.count_right++;
        else if (left_kind(t)) census.count_left++;
        else if (leader_kind(t)) census.count_leader++;
    }
    return census;
}

} // namespace gci
