#include "gci/sweep.hpp"

#include <exception>
#include <sstream>

#include "gci/engine.hpp"
#include "gci/graph.hpp"
#include "gci/protocol.hpp"
#include "gci/scheduler.hpp"

namespace gci {

SweepOutcome run_sweep_job(const SweepJob& job) {
    SweepOutcome out;
    out.job = job;
    out.family = job.graph_spec.substr(0, job.graph_spec.find(':'));
    if (const auto plus = out.family.find('+'); plus != std::string::npos)
        out.family = out.family.substr(0, plus);
    try {
        const Protocol p = parse_protocol_spec(job.protocol_spec);
        const Graph g = parse_graph_spec(job.graph_spec);
        auto sched = make_scheduler(job.scheduler_spec);
        out.n = g.n;
        out.seed = sched->seed();
        out.expected_yes = protocol_oracle(p, g);

        RunOptions opt;
        opt.max_steps = job.max_steps;
        opt.window = job.window;
        opt.record_steps = false;
        opt.sample_outputs = false;
        const Trace t = run(p, g, *sched, opt);
        out.verdict = verdict_string(t.verdict);
        out.steps = t.step_count;
        out.ok = (t.verdict == Verdict::converged_yes) == out.expected_yes &&
                 t.verdict != Verdict::timeout;
    } catch (const std::exception& e) {
        out.error = e.what();
        out.ok = false;
    }
    return out;
}

std::vector<SweepOutcome> run_sweep_serial(const std::vector<SweepJob>& jobs) {
    std::vector<SweepOutcome> outcomes;
    outcomes.reserve(jobs.size());
    for (const auto& job : jobs) outcomes.push_back(run_sweep_job(job));
    return outcomes;
}

std::vector<SweepOutcome> run_sweep_parallel(const std::vector<SweepJob>& jobs) {
    std::vector<SweepOutcome> outcomes(jobs.size());
    const int64_t count = static_cast<int64_t>(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (int64_t i = 0; i < count; ++i) outcomes[i] = run_sweep_job(jobs[i]);
    return outcomes;
}

std::string sweep_csv(const std::vector<SweepOutcome>& outcomes) {
    std::ostringstream csv;
    csv << "family,n,seed,verdict,steps,expected,ok\n";
    for (const auto& o : outcomes) {
        csv << o.family << ',' << o.n << ',' << o.seed << ','
            << (o.error.empty() ? o.verdict : "error") << ',' << o.steps << ','
            << (o.expected_yes ? "yes" : "no") << ',' << (o.ok ? 1 : 0) << '\n';
    }
    return csv.str();
}

bool sweep_all_ok(const std::vector<SweepOutcome>& outcomes) {
    for (const auto& o : outcomes)
        if (!o.ok) return false;
    return true;
}

} // namespace gci
