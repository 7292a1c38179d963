#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "gci/sweep.hpp"

using namespace gci;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::vector<SweepJob> benchmark_jobs() {
    std::vector<SweepJob> jobs;
    const auto str = [](int64_t v) { return std::to_string(v); };
    for (int n = 6; n <= 18; n += 2)
        for (int seed = 1; seed <= 5; ++seed) {
            jobs.push_back({"tree-id", "tree:" + str(n) + ":" + str(seed),
                            "random:" + str(seed), 300000, 0});
            // the 50|E| default window fires before the first reg flip here
            jobs.push_back({"kreg-id:k=2,bound=" + str(2 * n), "ring:" + str(n),
                            "random:" + str(seed), 1000000, 100000});
            jobs.push_back({"star-id:n=" + str(n), "star:" + str(n), "rr", 300000, 0});
        }
    return jobs;
}

bool same(const SweepOutcome& a, const SweepOutcome& b) {
    return a.family == b.family && a.n == b.n && a.seed == b.seed &&
           a.verdict == b.verdict && a.steps == b.steps &&
           a.expected_yes == b.expected_yes && a.ok == b.ok && a.error == b.error;
}

} // namespace

int main() {
    const auto jobs = benchmark_jobs();
    std::printf("sweep benchmark: %zu jobs\n", jobs.size());

    const auto t_serial = clock_type::now();
    const auto serial = run_sweep_serial(jobs);
    const double serial_s = seconds_since(t_serial);

    const auto t_parallel = clock_type::now();
    const auto parallel = run_sweep_parallel(jobs);
    const double parallel_s = seconds_since(t_parallel);

    int64_t mismatches = 0;
    for (size_t i = 0; i < jobs.size(); ++i)
        if (!same(serial[i], parallel[i])) ++mismatches;

    int64_t ok = 0;
    for (const auto& o : serial) ok += o.ok ? 1 : 0;

    std::printf("%-10s %10s %12s\n", "path", "time (s)", "outcomes ok");
    std::printf("%-10s %10.3f %8lld/%zu\n", "serial", serial_s, (long long)ok, serial.size());
    std::printf("%-10s %10.3f %8lld/%zu\n", "parallel", parallel_s, (long long)ok,
                parallel.size());
    std::printf("speedup: %.2fx, outcome mismatches: %lld\n",
                serial_s / (parallel_s > 0 ? parallel_s : 1e-9), (long long)mismatches);
    if (mismatches != 0) {
        std::printf("FAIL: parallel outcomes differ from the serial reference\n");
        return 1;
    }
    return 0;
}
