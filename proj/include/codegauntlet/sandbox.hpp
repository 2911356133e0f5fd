#ifndef CODEGAUNTLET_SANDBOX_HPP
#define CODEGAUNTLET_SANDBOX_HPP

#include <optional>
#include <string>
#include <vector>

namespace cg {

struct SandboxLimits {
    std::optional<double> cpu_time_limit_s;    // enforced via RLIMIT_CPU
    double wall_clock_limit_s = 60.0;          // watchdog backstop, always on
    std::optional<double> memory_limit_mib;    // watchdog kills on resident set over limit
};

// What happened to one sandboxed child process.
struct ExecutionOutcome {
    int exit_code = -1;                        // meaningful when term_signal == 0
    int term_signal = 0;                       // nonzero when the child died to a signal
    bool timed_out = false;                    // cpu or wall limit tripped
    bool memory_exceeded = false;              // watchdog killed it over the memory limit
    std::string stdout_text;
    std::string stderr_text;
    double elapsed_s = 0.0;                    // wall clock
    std::optional<double> peak_memory_mib;     // nullopt where the platform can't measure

    bool exited_zero() const { return term_signal == 0 && exit_code == 0; }
};

// Runs argv with stdin_data on stdin, capturing stdout/stderr, under the
// given limits. The child runs in its own process group and the watchdog
// kills the whole group, so runaway children cannot outlive the call. This
// is resource confinement for benchmarking, not a security boundary.
// Throws ConfigError when the executable cannot be launched at all.
ExecutionOutcome run_sandboxed(const std::vector<std::string>& argv, const std::string& stdin_data,
                               const SandboxLimits& limits);

}  // namespace cg

#endif
