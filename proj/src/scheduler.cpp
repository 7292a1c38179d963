#include "gci/scheduler.hpp"

#include <random>
#include <stdexcept>
#include <utility>

#include "gci/rng.hpp"
#include "gci/trace_io.hpp"

namespace gci {

namespace {

class RandomScheduler final : public Scheduler {
  public:
    explicit RandomScheduler(uint64_t seed) : seed_(seed), rng_(seed) {}

    std::optional<Interaction> next(const Graph& g, int64_t) override {
        const int64_t m = g.edge_count();
        if (m == 0) return std::nullopt;
        const auto idx = bounded(rng_, static_cast<uint64_t>(2 * m));
        const auto& [u, v] = g.edges[idx >> 1];
        return (idx & 1) ? Interaction{v, u} : Interaction{u, v};
    }

    std::string spec() const override { return "random:" + std::to_string(seed_); }
    uint64_t seed() const override { return seed_; }

  private:
    uint64_t seed_;
    std::mt19937_64 rng_;
};

class RoundRobinScheduler final : public Scheduler {
  public:
    std::optional<Interaction> next(const Graph& g, int64_t step_index) override {
        const int64_t m = g.edge_count();
        if (m == 0) return std::nullopt;
        const int64_t idx = step_index % (2 * m);
        const auto& [u, v] = g.edges[idx / 2];
        return (idx % 2) ? Interaction{v, u} : Interaction{u, v};
    }

    std::string spec() const override { return "rr"; }
};

class ScriptScheduler final : public Scheduler {
  public:
    ScriptScheduler(std::vector<Interaction> script, std::string spec)
        : script_(std::move(script)), spec_(std::move(spec)) {}

    std::optional<Interaction> next(const Graph&, int64_t step_index) override {
        if (step_index < 0 || step_index >= static_cast<int64_t>(script_.size()))
            return std::nullopt;
        return script_[step_index];
    }

    std::string spec() const override { return spec_; }

  private:
    std::vector<Interaction> script_;
    std::string spec_;
};

} // namespace

std::unique_ptr<Scheduler> make_scheduler(const std::string& spec) {
    if (spec == "rr") return std::make_unique<RoundRobinScheduler>();
    if (spec.rfind("random:", 0) == 0) {
        const std::string arg = spec.substr(7);
        try {
            size_t used = 0;
            const uint64_t seed = std::stoull(arg, &used);
            if (used != arg.size()) throw std::invalid_argument(arg);
            return std::make_unique<RandomScheduler>(seed);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad scheduler seed: " + arg);
        }
    }
    if (spec.rfind("script:", 0) == 0)
        return std::make_unique<ScriptScheduler>(load_script_file(spec.substr(7)), spec);
    throw std::invalid_argument("unknown scheduler spec: " + spec);
}

std::unique_ptr<Scheduler> make_script_scheduler(std::vector<Interaction> script) {
    return std::make_unique<ScriptScheduler>(std::move(script), "script:inline");
}

FairnessReport fairness_audit(const Graph& g, const std::vector<Interaction>& steps) {
    FairnessReport report;
    for (const auto& [u, v] : g.edges) {
        report.counts[{u, v}] = 0;
        report.counts[{v, u}] = 0;
    }
    for (const auto& s : steps) {
        auto it = report.counts.find({s.initiator, s.responder});
        if (it == report.counts.end())
            throw std::invalid_argument("audited interaction is not an edge");
        ++it->second;
    }
    for (const auto& [pair, count] : report.counts)
        if (count == 0) report.missing.push_back(pair);
    return report;
}

FairnessReport fairness_audit(const Graph& g, const Trace& trace) {
    std::vector<Interaction> steps;
    steps.reserve(trace.steps.size());
    for (const auto& s : trace.steps) steps.push_back(s.inter);
    return fairness_audit(g, steps);
}

} // namespace gci
