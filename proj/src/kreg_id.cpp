#include "gci/kreg_id.hpp"

#include <stdexcept>
#include <utility>

namespace gci {

int KRIEncoding::encode(KRIState s) const {
    return ((s.lf * (level_top + 1) + s.level) * 2 + (s.loc ? 0 : 1)) * 2 +
           (s.reg ? 0 : 1);
}

KRIState KRIEncoding::decode(int id) const {
    KRIState s;
    s.reg = id % 2 == 0;
    id /= 2;
    s.loc = id % 2 == 0;
    id /= 2;
    s.level = id % (level_top + 1);
    s.lf = id / (level_top + 1);
    return s;
}

KRIEncoding kri_encoding(const Protocol& p) {
    if (p.name != "kreg-id") throw std::invalid_argument("not a kreg-id protocol");
    int bound = static_cast<int>(p.params.at("bound"));
    int top = 0;
    while ((1 << (top + 1)) <= bound) top++;
    return {static_cast<int>(p.params.at("k")), top};
}

namespace {

std::pair<KRIState, KRIState> kri_delta(const KRIEncoding& enc, KRIState a, KRIState b) {
    int k = enc.k;
    int phi = enc.phi();
    int phim = enc.phi_marked();
    auto token = [&](const KRIState& s) { return s.lf <= k; };
    if (a.level == b.level) {
        // The election of leader tokens
        if (token(a) && token(b)) {
            if (a.level < enc.level_top) a.level++;
            a.lf = 0;
            b.lf = phi;
            a.reg = false;
            a.loc = false;
        }
        // Decision and movement of the token
        else if (token(a) && a.lf <= k - 2 && b.lf == phi) {
            a.lf++;
            b.lf = phim;
        } else if (token(a) && b.lf == phim) {
            a.lf = phi;
            b.lf = 0;
            b.reg = a.reg;
        } else if (a.lf == k - 1 && b.lf == phi) {
            a.lf = k;
            b.lf = phim;
            if (!a.loc) {
                a.reg = true;
                a.loc = true;
            }
        }
        // Reset of reg (the degree of agent a is at least k+1)
        else if (a.lf == k && b.lf == phi) {
            a.lf = 0;
            b.lf = phim;
            a.reg = false;
        }
        // Reset of reg (loc_a or loc_b is no)
        if (!a.loc || !b.loc) {
            a.reg = false;
            b.reg = false;
        }
    } else if (a.level > b.level) {
        b.level = a.level;
        b.loc = false;
        b.lf = phi;
    }
    return {a, b};
}

} // namespace

Protocol kreg_id(int k, int bound, bool bound_is_exact_n) {
    if (k < 1) throw std::invalid_argument("kreg-id needs k >= 1");
    if (bound < 2) throw std::invalid_argument("kreg-id needs bound >= 2");
    int top = 0;
    while ((1 << (top + 1)) <= bound) top++;
    KRIEncoding enc{k, top};

    Protocol p;
    p.name = "kreg-id";
    p.params = {{"k", k}, {"bound", bound}, {"exact", bound_is_exact_n ? 1 : 0}};
    p.state_count = enc.states();
    p.initial = enc.encode({0, 0, false, false});
    p.symmetric = false;
    int q = p.state_count;
    p.table.resize(static_cast<size_t>(q) * q);
    p.gamma_yes.resize(q);
    for (int s = 0; s < q; s++) p.gamma_yes[s] = enc.decode(s).reg ? 1 : 0;
    for (int sa = 0; sa < q; sa++)
        for (int sb = 0; sb < q; sb++) {
            auto [a2, b2] = kri_delta(enc, enc.decode(sa), enc.decode(sb));
            p.table[static_cast<size_t>(sa) * q + sb] = {enc.encode(a2), enc.encode(b2)};
        }
    return p;
}

} // namespace gci
