#include "gci/trace_io.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace gci {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

void dump_to(const std::string& text, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text << '\n';
}

} // namespace

std::string trace_to_json(const Trace& t) {
    ordered j;
    j["protocol"] = t.protocol_name;
    j["params"] = ordered::object();
    for (const auto& [k, v] : t.protocol_params) j["params"][k] = v;
    j["graph"] = t.graph_spec;
    j["scheduler"] = t.scheduler_spec;
    j["seed"] = t.seed;
    j["initial"] = t.initial;
    j["steps"] = ordered::array();
    for (const auto& s : t.steps) {
        ordered e;
        e["i"] = s.index;
        e["init"] = s.inter.initiator;
        e["resp"] = s.inter.responder;
        e["after"] = {{std::to_string(s.inter.initiator), s.init_after},
                      {std::to_string(s.inter.responder), s.resp_after}};
        j["steps"].push_back(std::move(e));
    }
    j["outputs"] = ordered::array();
    for (const auto& sample : t.output_samples) {
        std::vector<int> row(sample.begin(), sample.end());
        j["outputs"].push_back(row);
    }
    j["step_count"] = t.step_count;
    j["final"] = t.final_config;
    j["verdict"] = verdict_string(t.verdict);
    return j.dump(2);
}

void write_trace_file(const Trace& t, const std::string& path) {
    dump_to(trace_to_json(t), path);
}

std::vector<Interaction> parse_script(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("bad script JSON: ") + e.what());
    }
    if (!j.is_array()) throw std::invalid_argument("script must be a JSON list");
    std::vector<Interaction> script;
    script.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw std::invalid_argument("script entries must be [initiator, responder] pairs");
        script.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return script;
}

std::string script_to_json(const std::vector<Interaction>& script) {
    json j = json::array();
    for (const auto& s : script) j.push_back({s.initiator, s.responder});
    return j.dump();
}

std::vector<Interaction> load_script_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open script: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_script(text);
}

void write_script_file(const std::vector<Interaction>& script, const std::string& path) {
    dump_to(script_to_json(script), path);
}

bool replay_trace(const Protocol& p, const Graph& g, const Trace& t) {
    Configuration c = t.initial.empty() ? initial_configuration(p, g) : t.initial;
    for (const auto& s : t.steps) {
        c = step(p, g, c, s.inter);
        if (c[s.inter.initiator] != s.init_after || c[s.inter.responder] != s.resp_after)
            return false;
    }
    return t.final_config.empty() || c == t.final_config;
}

} // namespace gci
