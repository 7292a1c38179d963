#include "doctest.h"

#include "gci/engine.hpp"
#include "gci/kreg_id.hpp"
#include "gci/scheduler.hpp"

using namespace gci;

namespace {

int floor_log2(int x) {
    int r = 0;
    while ((1 << (r + 1)) <= x) ++r;
    return r;
}

} // namespace

TEST_CASE("state count formula and encoding") {
    for (int k : {1, 2, 3})
        for (int bound : {4, 8, 16}) {
            const Protocol p = kreg_id(k, bound);
            CHECK(p.state_count == (k + 3) * (floor_log2(bound) + 1) * 4);
            CHECK_NOTHROW(validate_protocol(p));
            const KRIEncoding enc = kri_encoding(p);
            CHECK(enc.k == k);
            CHECK(enc.level_top == floor_log2(bound));
            for (int id = 0; id < p.state_count; ++id)
                CHECK(enc.encode(enc.decode(id)) == id);
            const KRIState init = enc.decode(p.initial);
            CHECK(init.lf == 0);
            CHECK(init.level == 0);
            CHECK(!init.loc);
            CHECK(!init.reg);
        }
    CHECK_THROWS_AS(kreg_id(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(kreg_id(2, 1), std::invalid_argument);
}

TEST_CASE("transitions, k=2") {
    const Protocol p = kreg_id(2, 8); // levels 0..3, phi=3, phi'=4
    const KRIEncoding e = kri_encoding(p);
    const auto d = [&](KRIState a, KRIState b) { return p.delta(e.encode(a), e.encode(b)); };
    const auto pr = [&](KRIState a, KRIState b) {
        return std::pair<int, int>{e.encode(a), e.encode(b)};
    };

    // merge: the initiator's token restarts one level up, unregistered
    CHECK(d({1, 2, true, true}, {2, 2, false, true}) ==
          pr({0, 3, false, false}, {3, 2, false, false}));
    // merge at the top level saturates
    CHECK(d({0, 3, true, true}, {1, 3, true, true}) ==
          pr({0, 3, false, false}, {3, 3, true, false}));
    // mark: the token counts one unmarked neighbour
    CHECK(d({0, 1, false, false}, {3, 1, true, true}) ==
          pr({1, 1, false, false}, {4, 1, true, false}));
    // move: the token restarts on a marked neighbour carrying reg along
    CHECK(d({1, 2, true, true}, {4, 2, true, false}) ==
          pr({3, 2, true, true}, {0, 2, true, true}));
    // degree >= k: first confirmation sets loc and claims reg
    CHECK(d({1, 0, false, false}, {3, 0, true, true}) ==
          pr({2, 0, true, true}, {4, 0, true, true}));
    // ... but a partner that has not confirmed suppresses reg
    CHECK(d({1, 0, false, false}, {3, 0, false, true}) ==
          pr({2, 0, true, false}, {4, 0, false, false}));
    // degree >= k+1: one more unmarked neighbour resets the count
    CHECK(d({2, 1, true, true}, {3, 1, true, false}) ==
          pr({0, 1, true, false}, {4, 1, true, false}));
    // level adoption erases the lower agent's token and confirmation
    CHECK(d({3, 2, true, true}, {1, 0, true, true}) ==
          pr({3, 2, true, true}, {3, 2, false, true}));
    // lower-level initiator does nothing
    CHECK(d({1, 0, true, true}, {3, 2, true, true}) ==
          pr({1, 0, true, true}, {3, 2, true, true}));
    // same level, no token anywhere: only the loc screen applies
    CHECK(d({3, 1, false, true}, {4, 1, true, true}) ==
          pr({3, 1, false, false}, {4, 1, true, false}));
    CHECK(d({3, 1, true, true}, {4, 1, true, true}) ==
          pr({3, 1, true, true}, {4, 1, true, true}));
}

TEST_CASE("transitions, k=1 skips the counting ladder") {
    const Protocol p = kreg_id(1, 4); // phi=2, phi'=3
    const KRIEncoding e = kri_encoding(p);
    const auto d = [&](KRIState a, KRIState b) { return p.delta(e.encode(a), e.encode(b)); };
    const auto pr = [&](KRIState a, KRIState b) {
        return std::pair<int, int>{e.encode(a), e.encode(b)};
    };

    // L_0 is already L_{k-1}: meeting an unmarked neighbour confirms directly
    CHECK(d({0, 1, false, false}, {2, 1, true, true}) ==
          pr({1, 1, true, true}, {3, 1, true, true}));
    // a second unmarked neighbour proves degree >= 2 and resets
    CHECK(d({1, 1, true, true}, {2, 1, true, true}) ==
          pr({0, 1, true, false}, {3, 1, true, true}));
}

TEST_CASE("runs and exhaustive checks on small graphs") {
    auto rr = make_scheduler("rr");
    const Trace t = run(kreg_id(1, 2, true), line_graph(2), *rr);
    CHECK(t.verdict == Verdict::converged_yes);

    CHECK(check_stable(kreg_id(1, 2), line_graph(2)).verdict ==
          StabilityVerdict::all_yes_stable);
    CHECK(check_stable(kreg_id(1, 4), line_graph(2)).verdict ==
          StabilityVerdict::all_yes_stable);
    CHECK(check_stable(kreg_id(1, 3), line_graph(3)).verdict ==
          StabilityVerdict::all_no_stable);
    CHECK(check_stable(kreg_id(2, 3), ring_graph(3)).verdict ==
          StabilityVerdict::all_yes_stable);
    CHECK(check_stable(kreg_id(1, 3), ring_graph(3)).verdict ==
          StabilityVerdict::all_no_stable);
    CHECK(check_stable(kreg_id(2, 4), line_graph(4)).verdict ==
          StabilityVerdict::all_no_stable);
}

TEST_CASE("level stays within floor(log2 n) and the top level keeps a token") {
    const Protocol p = kreg_id(2, 8);
    const KRIEncoding enc = kri_encoding(p);
    const Graph g = ring_graph(6);
    const int level_cap = floor_log2(g.n);

    bool levels_ok = true, top_has_token = true;
    RunOptions opt;
    opt.record_steps = false;
    opt.max_steps = 50'000;
    opt.window = opt.max_steps;
    opt.observer = [&](int64_t, const Interaction&, const Configuration& c) {
        int top = 0;
        bool token_at_top = false;
        for (int s : c) {
            const KRIState st = enc.decode(s);
            if (st.level > level_cap) levels_ok = false;
            if (st.level > top) {
                top = st.level;
                token_at_top = false;
            }
            if (st.level == top && st.lf <= enc.k) token_at_top = true;
        }
        if (!token_at_top) top_has_token = false;
    };
    auto rnd = make_scheduler("random:23");
    run(p, g, *rnd, opt);
    CHECK(levels_ok);
    CHECK(top_has_token);
}
