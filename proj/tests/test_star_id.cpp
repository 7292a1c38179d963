#include "doctest.h"

#include "gci/engine.hpp"
#include "gci/scheduler.hpp"
#include "gci/star_id.hpp"

using namespace gci;

namespace {

int enc(int lf, int star) { return si_encode({lf, star}); }

constexpr int kPhi = 0, kMarked = 1, kCand = 2;

} // namespace

TEST_CASE("state space, encoding, symmetry") {
    for (int n : {3, 4, 5, 10}) {
        const Protocol p = star_id(n);
        CHECK(p.state_count == 3 * n + 3);
        CHECK(p.symmetric);
        CHECK_NOTHROW(validate_protocol(p));
        CHECK(!first_asymmetric_pair(p).has_value());
        CHECK(p.initial == enc(kPhi, si_star_no));
        for (int id = 0; id < p.state_count; ++id) {
            CHECK(si_encode(si_decode(id)) == id);
            CHECK(p.gamma(id) == (si_decode(id).star == si_star_yes));
        }
    }

    const Protocol trivial = star_id(2);
    CHECK(trivial.state_count == 1);
    CHECK(trivial.gamma(0));
    CHECK(trivial.delta(0, 0) == std::pair<int, int>{0, 0});
    CHECK_THROWS_AS(star_id(0), std::invalid_argument);
}

TEST_CASE("transitions, n=4") {
    const Protocol p = star_id(4);
    const auto d = [&](int a, int b) { return p.delta(a, b); };
    const auto pr = [](int a, int b) { return std::pair<int, int>{a, b}; };

    // election of two candidates
    CHECK(d(enc(kPhi, si_star_no), enc(kPhi, si_star_no)) ==
          pr(enc(kCand, si_star_no), enc(kCand, si_star_no)));
    // a candidate starts counting; both orientations
    CHECK(d(enc(kCand, si_star_no), enc(kPhi, si_star_no)) ==
          pr(enc(3, si_star_no), enc(kMarked, si_star_no)));
    CHECK(d(enc(kPhi, si_star_no), enc(kCand, si_star_no)) ==
          pr(enc(kMarked, si_star_no), enc(3, si_star_no)));
    // counting to L_{n-1} declares yes on both participants
    CHECK(d(enc(3, si_star_no), enc(kPhi, si_star_no)) ==
          pr(enc(4, si_star_yes), enc(kMarked, si_star_yes)));
    // a full central agent no longer counts
    CHECK(d(enc(4, si_star_yes), enc(kPhi, si_star_yes)) ==
          pr(enc(4, si_star_yes), enc(kPhi, si_star_yes)));
    // two marked agents prove a non-star; so do marked + candidate
    CHECK(d(enc(kMarked, si_star_no), enc(kMarked, si_star_no)) ==
          pr(enc(kMarked, si_star_never), enc(kMarked, si_star_never)));
    CHECK(d(enc(kMarked, si_star_no), enc(kCand, si_star_yes)) ==
          pr(enc(kMarked, si_star_never), enc(kCand, si_star_never)));
    CHECK(d(enc(kCand, si_star_yes), enc(kMarked, si_star_no)) ==
          pr(enc(kCand, si_star_never), enc(kMarked, si_star_never)));
    // never absorbs everything it touches
    CHECK(d(enc(kPhi, si_star_never), enc(4, si_star_yes)) ==
          pr(enc(kPhi, si_star_never), enc(4, si_star_never)));
    // yes conveys
    CHECK(d(enc(kPhi, si_star_yes), enc(kMarked, si_star_no)) ==
          pr(enc(kPhi, si_star_yes), enc(kMarked, si_star_yes)));
    // marked initiator against an empty agent does nothing
    CHECK(d(enc(kMarked, si_star_no), enc(kPhi, si_star_no)) ==
          pr(enc(kMarked, si_star_no), enc(kPhi, si_star_no)));
    // two candidates do nothing
    CHECK(d(enc(kCand, si_star_no), enc(kCand, si_star_no)) ==
          pr(enc(kCand, si_star_no), enc(kCand, si_star_no)));
}

TEST_CASE("runs on stars and non-stars") {
    for (int n : {3, 5, 8}) {
        const Protocol p = star_id(n);
        auto rr = make_scheduler("rr");
        CHECK(run(p, star_graph(n), *rr).verdict == Verdict::converged_yes);
    }
    {
        auto rr = make_scheduler("rr");
        CHECK(run(star_id(4), line_graph(4), *rr).verdict == Verdict::converged_no);
    }
    {
        auto rr = make_scheduler("rr");
        CHECK(run(star_id(5), ring_graph(5), *rr).verdict == Verdict::converged_no);
    }
    {
        auto rr = make_scheduler("rr");
        CHECK(run(star_id(6), add_edge(star_graph(6), 1, 2), *rr).verdict ==
              Verdict::converged_no);
    }

    CHECK(check_stable(star_id(4), star_graph(4)).verdict == StabilityVerdict::all_yes_stable);
    CHECK(check_stable(star_id(4), line_graph(4)).verdict == StabilityVerdict::all_no_stable);
    CHECK(check_stable(star_id(4), ring_graph(4)).verdict == StabilityVerdict::all_no_stable);
    CHECK(check_stable(star_id(3), line_graph(3)).verdict == StabilityVerdict::all_yes_stable);
}

TEST_CASE("one-orientation-only schedule still identifies the star") {
    const int n = 5;
    std::vector<Interaction> script;
    for (int sweep = 0; sweep < 8; ++sweep)
        for (int leaf = 1; leaf < n; ++leaf) script.push_back({0, leaf});
    auto sched = make_script_scheduler(script);
    RunOptions opt;
    opt.max_steps = static_cast<int64_t>(script.size()) + 1; // let the script end signal fire
    opt.window = opt.max_steps + 1;
    const Trace t = run(star_id(n), star_graph(n), *sched, opt);
    CHECK(t.verdict == Verdict::converged_yes);
    CHECK(t.step_count == static_cast<int64_t>(script.size()));
}

TEST_CASE("counting is conserved against the marked agents") {
    for (const auto& [g, seed] : {std::pair{star_graph(6), 11u}, {ring_graph(5), 12u},
                                  {random_tree(7, 2), 13u}, {complete_graph(4), 14u}}) {
        const Protocol p = star_id(g.n);
        bool ok = true;
        RunOptions opt;
        opt.record_steps = false;
        opt.max_steps = 20'000;
        opt.window = opt.max_steps;
        opt.observer = [&](int64_t, const Interaction&, const Configuration& c) {
            const auto [lhs, rhs] = si_conservation(c);
            if (lhs != rhs) ok = false;
        };
        auto rnd = make_scheduler("random:" + std::to_string(seed));
        run(p, g, *rnd, opt);
        CHECK(ok);
    }
}

TEST_CASE("a full count pins the rest of the population") {
    const int n = 7;
    const Protocol p = star_id(n);
    bool seen_full = false, shape_ok = true;
    RunOptions opt;
    opt.record_steps = false;
    opt.max_steps = 50'000;
    opt.window = opt.max_steps;
    opt.observer = [&](int64_t, const Interaction&, const Configuration& c) {
        int full = 0, cand = 0, marked = 0;
        for (int s : c) {
            const int lf = si_decode(s).lf;
            if (lf == n) ++full;
            if (lf == kCand) ++cand;
            if (lf == kMarked) ++marked;
        }
        if (full > 0) {
            seen_full = true;
            if (full != 1 || cand != 1 || marked != n - 2) shape_ok = false;
        }
    };
    auto rnd = make_scheduler("random:31");
    run(p, star_graph(n), *rnd, opt);
    CHECK(seen_full);
    CHECK(shape_ok);
}
