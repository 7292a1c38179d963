#include "gci/star_id.hpp"

#include <stdexcept>

namespace gci {

namespace {

constexpr int kPhi = 0;
constexpr int kPhiMarked = 1;
constexpr int kCandidate = 2; // l'

// L_i <-> lf = i + 1, for 2 <= i <= n-1
int central_count(int lf) { return lf >= 3 ? lf - 1 : 0; }

// The pseudocode guards are written for one orientation but the protocol
// promises orientation symmetry, so every rule matches roles on the unordered
// pair and updates whichever side holds each role. Rule order is the
// pseudocode order; later guards see the values written by earlier ones.
std::pair<SIState, SIState> si_delta(int n, SIState a, SIState b) {
    if (a.star == si_star_never || b.star == si_star_never) {
        a.star = si_star_never;
        b.star = si_star_never;
        return {a, b};
    }
    // The election of a central agent, then counting
    if (a.lf == kPhi && b.lf == kPhi) {
        a.lf = kCandidate;
        b.lf = kCandidate;
    } else if (a.lf == kCandidate && b.lf == kPhi) {
        a.lf = 3; // L_2
        b.lf = kPhiMarked;
    } else if (b.lf == kCandidate && a.lf == kPhi) {
        b.lf = 3;
        a.lf = kPhiMarked;
    } else if (central_count(a.lf) >= 2 && central_count(a.lf) <= n - 2 && b.lf == kPhi) {
        a.lf++;
        b.lf = kPhiMarked;
    } else if (central_count(b.lf) >= 2 && central_count(b.lf) <= n - 2 && a.lf == kPhi) {
        b.lf++;
        a.lf = kPhiMarked;
    }
    if (central_count(a.lf) == n - 1 || central_count(b.lf) == n - 1) {
        a.star = si_star_yes;
        b.star = si_star_yes;
    }
    // Decision of never
    if ((a.lf == kPhiMarked && b.lf == kPhiMarked) ||
        (a.lf == kPhiMarked && b.lf == kCandidate) ||
        (b.lf == kPhiMarked && a.lf == kCandidate)) {
        a.star = si_star_never;
        b.star = si_star_never;
    }
    // Conveyance of yes
    if (a.star == si_star_yes || b.star == si_star_yes) {
        a.star = si_star_yes;
        b.star = si_star_yes;
    }
    return {a, b};
}

} // namespace

int si_encode(SIState s) { return s.lf * 3 + s.star; }

SIState si_decode(int id) { return {id / 3, id % 3}; }

Protocol star_id(int n) {
    if (n < 1) throw std::invalid_argument("star-id needs n >= 1");
    Protocol p;
    p.name = "star-id";
    p.params = {{"n", n}};
    p.symmetric = true;
    if (n <= 2) {
        p.state_count = 1;
        p.initial = 0;
        p.table = {{0, 0}};
        p.gamma_yes = {1};
        return p;
    }
    int q = 3 * (n + 1);
    p.state_count = q;
    p.initial = si_encode({kPhi, si_star_no});
    p.table.resize(static_cast<size_t>(q) * q);
    p.gamma_yes.resize(q);
    for (int s = 0; s < q; s++)
        p.gamma_yes[s] = si_decode(s).star == si_star_yes ? 1 : 0;
    for (int sa = 0; sa < q; sa++)
        for (int sb = 0; sb < q; sb++) {
            auto [a2, b2] = si_delta(n, si_decode(sa), si_decode(sb));
            p.table[static_cast<size_t>(sa) * q + sb] = {si_encode(a2), si_encode(b2)};
        }
    return p;
}

std::pair<int, int> si_conservation(const Configuration& c) {
    int lhs = 0, rhs = 0;
    for (int s : c) {
        int lf = si_decode(s).lf;
        lhs += central_count(lf);
        if (lf == kPhiMarked || lf >= 3) rhs++;
    }
    return {lhs, rhs};
}

} // namespace gci
