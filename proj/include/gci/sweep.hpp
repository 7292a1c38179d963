#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gci {

struct SweepJob {
    std::string protocol_spec;
    std::string graph_spec;
    std::string scheduler_spec;
    int64_t max_steps = 1'000'000;
    int64_t window = 0; // 0 picks the default
};

struct SweepOutcome {
    SweepJob job;
    std::string family; // graph family name from the spec
    int n = 0;
    uint64_t seed = 0;  // scheduler seed
    std::string verdict;
    int64_t steps = 0;
    bool expected_yes = false; // class oracle on the generated graph
    bool ok = false;           // verdict matches the oracle
    std::string error;         // non-empty when the job failed to run
};

SweepOutcome run_sweep_job(const SweepJob& job);

// Serial reference implementation.
std::vector<SweepOutcome> run_sweep_serial(const std::vector<SweepJob>& jobs);

// OpenMP fan-out over jobs; results are in job order and identical to the
// serial ones.
std::vector<SweepOutcome> run_sweep_parallel(const std::vector<SweepJob>& jobs);

// header: family,n,seed,verdict,steps,expected,ok
std::string sweep_csv(const std::vector<SweepOutcome>& outcomes);

bool sweep_all_ok(const std::vector<SweepOutcome>& outcomes);

} // namespace gci
