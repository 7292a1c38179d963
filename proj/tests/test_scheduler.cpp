#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include "gci/scheduler.hpp"
#include "gci/tree_id.hpp"

using namespace gci;

TEST_CASE("round robin walks the sorted edge list, both orientations") {
    const Graph g = line_graph(3);
    auto rr = make_scheduler("rr");
    const std::vector<Interaction> expect = {{0, 1}, {1, 0}, {1, 2}, {2, 1}};
    for (int lap = 0; lap < 3; ++lap)
        for (size_t k = 0; k < expect.size(); ++k)
            CHECK(*rr->next(g, lap * 4 + static_cast<int64_t>(k)) == expect[k]);
    CHECK(rr->spec() == "rr");
    CHECK(rr->seed() == 0);
}

TEST_CASE("round robin covers every ordered pair once per cycle") {
    const Graph g = ring_graph(4);
    auto rr = make_scheduler("rr");
    std::set<std::pair<int, int>> seen;
    for (int64_t i = 0; i < 2 * g.edge_count(); ++i) {
        const auto inter = *rr->next(g, i);
        seen.insert({inter.initiator, inter.responder});
    }
    CHECK(static_cast<int64_t>(seen.size()) == 2 * g.edge_count());
}

TEST_CASE("random scheduler is seed deterministic") {
    const Graph g = ring_graph(5);
    auto a = make_scheduler("random:99");
    auto b = make_scheduler("random:99");
    auto c = make_scheduler("random:100");
    CHECK(a->seed() == 99);
    CHECK(a->spec() == "random:99");
    bool all_same_as_c = true;
    for (int64_t i = 0; i < 200; ++i) {
        const auto x = *a->next(g, i);
        CHECK(x == *b->next(g, i));
        if (x != *c->next(g, i)) all_same_as_c = false;
    }
    CHECK(!all_same_as_c);
}

TEST_CASE("random scheduler hits ordered pairs uniformly") {
    const Graph g = ring_graph(4); // 8 ordered pairs
    auto s = make_scheduler("random:7");
    std::map<std::pair<int, int>, int64_t> counts;
    const int64_t draws = 100000;
    for (int64_t i = 0; i < draws; ++i) {
        const auto inter = *s->next(g, i);
        REQUIRE(g.has_edge(inter.initiator, inter.responder));
        ++counts[{inter.initiator, inter.responder}];
    }
    REQUIRE(counts.size() == 8);
    for (const auto& [pair, n] : counts) {
        CHECK(n > draws / 8 - 500); // ~4.8 sigma
        CHECK(n < draws / 8 + 500);
    }
}

TEST_CASE("scripts run out") {
    const Graph g = line_graph(3);
    auto s = make_script_scheduler({{0, 1}, {2, 1}});
    CHECK(*s->next(g, 0) == Interaction{0, 1});
    CHECK(*s->next(g, 1) == Interaction{2, 1});
    CHECK(!s->next(g, 2).has_value());
    CHECK(!s->next(g, 100).has_value());
    CHECK(s->spec() == "script:inline");
}

TEST_CASE("script files") {
    const std::string path = "sched_script_test.json";
    { std::ofstream(path) << "[[0, 1], [1, 2], [2, 1]]\n"; }
    auto s = make_scheduler("script:" + path);
    const Graph g = line_graph(3);
    CHECK(*s->next(g, 0) == Interaction{0, 1});
    CHECK(*s->next(g, 1) == Interaction{1, 2});
    CHECK(*s->next(g, 2) == Interaction{2, 1});
    CHECK(!s->next(g, 3).has_value());
    CHECK(s->spec() == "script:" + path);
    std::remove(path.c_str());
    CHECK_THROWS(make_scheduler("script:" + path)); // gone now
}

TEST_CASE("scheduler spec errors") {
    CHECK_THROWS_AS(make_scheduler("roulette"), std::invalid_argument);
    CHECK_THROWS_AS(make_scheduler("random:"), std::invalid_argument);
    CHECK_THROWS_AS(make_scheduler("random:pi"), std::invalid_argument);
    CHECK_THROWS_AS(make_scheduler(""), std::invalid_argument);
}

TEST_CASE("fairness audit") {
    const Graph g = line_graph(3);

    const FairnessReport empty = fairness_audit(g, std::vector<Interaction>{});
    CHECK(empty.counts.size() == 4);
    CHECK(empty.missing.size() == 4);
    CHECK(!empty.zero_debt());

    const std::vector<Interaction> steps = {{0, 1}, {0, 1}, {1, 0}, {1, 2}, {2, 1}};
    const FairnessReport full = fairness_audit(g, steps);
    CHECK(full.zero_debt());
    CHECK(full.counts.at({0, 1}) == 2);
    CHECK(full.counts.at({1, 0}) == 1);
    CHECK(full.counts.at({2, 1}) == 1);

    const FairnessReport partial = fairness_audit(g, std::vector<Interaction>{{0, 1}});
    CHECK(partial.missing == std::vector<std::pair<int, int>>{{1, 0}, {1, 2}, {2, 1}});

    CHECK_THROWS_AS(fairness_audit(g, std::vector<Interaction>{{0, 2}}),
                    std::invalid_argument);

    auto rr = make_scheduler("rr");
    const Trace t = run(tree_id(), g, *rr);
    CHECK(fairness_audit(g, t).zero_debt());
}
