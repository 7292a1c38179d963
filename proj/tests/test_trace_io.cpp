#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "gci/scheduler.hpp"
#include "gci/star_id.hpp"
#include "gci/trace_io.hpp"
#include "gci/tree_id.hpp"

using namespace gci;

namespace {

Trace record_small_run() {
    auto rr = make_scheduler("rr");
    RunOptions opt;
    opt.max_steps = 40;
    opt.window = 8;
    return run(tree_id(), line_graph(3), *rr, opt);
}

} // namespace

TEST_CASE("trace JSON carries the whole run") {
    const Trace t = record_small_run();
    const auto j = nlohmann::json::parse(trace_to_json(t));

    CHECK(j["protocol"] == "tree-id");
    CHECK(j["params"].is_object());
    CHECK(j["scheduler"] == "rr");
    CHECK(j["seed"] == 0);
    CHECK(j["verdict"] == verdict_string(t.verdict));
    CHECK(j["step_count"] == t.step_count);
    CHECK(j["initial"].get<Configuration>() == t.initial);
    CHECK(j["final"].get<Configuration>() == t.final_config);
    REQUIRE(j["steps"].size() == t.steps.size());

    const auto& s0 = j["steps"][0];
    CHECK(s0["i"] == 1);
    CHECK(s0["init"] == 0);
    CHECK(s0["resp"] == 1);
    CHECK(s0["after"]["1"] == t.steps[0].resp_after);
    CHECK(s0["after"].size() == 2);

    REQUIRE(!j["outputs"].empty());
    CHECK(j["outputs"][0].size() == 3);

    // key order is part of the format
    const std::string text = trace_to_json(t);
    CHECK(text.find("\"protocol\"") < text.find("\"graph\""));
    CHECK(text.find("\"graph\"") < text.find("\"steps\""));
    CHECK(text.find("\"steps\"") < text.find("\"verdict\""));
}

TEST_CASE("trace JSON is byte deterministic") {
    auto a = make_scheduler("random:31");
    auto b = make_scheduler("random:31");
    RunOptions opt;
    opt.max_steps = 200;
    const Trace ta = run(star_id(4), star_graph(4), *a, opt);
    const Trace tb = run(star_id(4), star_graph(4), *b, opt);
    CHECK(trace_to_json(ta) == trace_to_json(tb));
}

TEST_CASE("traces replay") {
    const Trace t = record_small_run();
    const Graph g = line_graph(3);
    CHECK(replay_trace(tree_id(), g, t));

    Trace corrupt = t;
    corrupt.steps[2].resp_after = (corrupt.steps[2].resp_after + 1) % 18;
    CHECK(!replay_trace(tree_id(), g, corrupt));

    Trace bad_final = t;
    bad_final.final_config[0] = (bad_final.final_config[0] + 1) % 18;
    CHECK(!replay_trace(tree_id(), g, bad_final));

    CHECK(!replay_trace(star_id(3), g, t)); // wrong protocol
}

TEST_CASE("trace files") {
    const Trace t = record_small_run();
    const std::string path = "trace_io_test.json";
    write_trace_file(t, path);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == trace_to_json(t) + "\n");
    std::remove(path.c_str());
}

TEST_CASE("script round trip") {
    const std::vector<Interaction> script = {{0, 1}, {3, 2}, {1, 0}};
    CHECK(script_to_json(script) == "[[0,1],[3,2],[1,0]]");
    CHECK(parse_script(script_to_json(script)) == script);
    CHECK(parse_script("[]").empty());
    CHECK(parse_script(" [ [4, 5] ] ") == std::vector<Interaction>{{4, 5}});

    const std::string path = "script_io_test.json";
    write_script_file(script, path);
    CHECK(load_script_file(path) == script);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_script_file(path), std::runtime_error);
}

TEST_CASE("script parse errors") {
    CHECK_THROWS_AS(parse_script("{\"a\": 1}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_script("[[0,1,2]]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_script("[[0]]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_script("[[0,\"1\"]]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_script("[0,1]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_script("not json"), std::invalid_argument);
}
