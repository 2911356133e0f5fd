#include "codegauntlet/local_judge.hpp"

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>

#include "codegauntlet/atomic_file.hpp"
#include "codegauntlet/error.hpp"

namespace cg {

namespace fs = std::filesystem;

std::vector<std::string> LocalJudgeConfig::effective_compile_command() const {
    if (!compile_command.empty()) return compile_command;
    if (interpreter_command.empty()) return {};
    return {interpreter_command.front(), "-m", "py_compile"};
}

std::string normalize_output(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    std::string line;
    auto flush_line = [&] {
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
        out += line;
        out += '\n';
        line.clear();
    };
    for (char c : text) {
        if (c == '\n') flush_line();
        else line.push_back(c);
    }
    if (!line.empty()) flush_line();
    while (!out.empty() && out.back() == '\n') out.pop_back();
    return out;
}

bool outputs_match(const std::string& actual, const std::string& expected) {
    return normalize_output(actual) == normalize_output(expected);
}

namespace {

// Scratch .py file whose name carries the temp marker so store readers
// never mistake it for data.
class ScratchSolution {
  public:
    explicit ScratchSolution(const std::string& code) {
        static std::atomic<unsigned> seq{0};
        path_ = fs::temp_directory_path() /
                ("cg_solution" + std::string(kTempMarker) + std::to_string(::getpid()) + "." +
                 std::to_string(seq.fetch_add(1)) + ".py");
        std::ofstream out(path_, std::ios::binary);
        out << code;
        out.close();
        if (!out) throw StoreError("cannot write scratch solution file '" + path_.string() + "'");
    }
    ~ScratchSolution() {
        std::error_code ec;
        fs::remove(path_, ec);
    }
    const fs::path& path() const { return path_; }

  private:
    fs::path path_;
};

constexpr double kCompileCheckWallS = 20.0;

}  // namespace

LocalJudgeResult judge_locally(const Problem& problem, const std::string& code,
                               const LocalJudgeConfig& config) {
    LocalJudgeResult result;
    if (code.empty()) {
        result.verdict = {VerdictCategory::CompileError, "Compile Error: empty submission"};
        return result;
    }
    if (config.interpreter_command.empty())
        throw ConfigError("local judge: interpreter_command is empty");

    ScratchSolution solution(code);

    if (config.compile_check) {
        auto cmd = config.effective_compile_command();
        cmd.push_back(solution.path().string());
        SandboxLimits limits;
        limits.cpu_time_limit_s = kCompileCheckWallS / 2;
        limits.wall_clock_limit_s = kCompileCheckWallS;
        ExecutionOutcome check = run_sandboxed(cmd, "", limits);
        if (!check.exited_zero()) {
            result.verdict = {VerdictCategory::CompileError, "Compile Error"};
            result.runs.push_back(std::move(check));
            return result;
        }
    }

    std::vector<std::string> cmd = config.interpreter_command;
    cmd.push_back(solution.path().string());

    SandboxLimits limits;
    limits.cpu_time_limit_s = problem.cpu_time_limit_s;
    limits.wall_clock_limit_s = 2.0 * problem.cpu_time_limit_s;
    limits.memory_limit_mib = problem.memory_limit_mib;

    for (std::size_t i = 0; i < problem.samples.size(); ++i) {
        ExecutionOutcome run = run_sandboxed(cmd, problem.samples[i].input, limits);
        const std::string where = " on sample " + std::to_string(i + 1);

        const bool over_memory =
            run.memory_exceeded ||
            (run.peak_memory_mib && problem.memory_limit_mib > 0 &&
             *run.peak_memory_mib > problem.memory_limit_mib);

        if (run.timed_out) {
            result.verdict = {VerdictCategory::TimeLimitExceeded, "Time Limit Exceeded" + where};
        } else if (over_memory) {
            result.verdict = {VerdictCategory::MemoryLimitExceeded, "Memory Limit Exceeded" + where};
        } else if (!run.exited_zero()) {
            result.verdict = {VerdictCategory::RunTimeError, "Run Time Error" + where};
        } else if (!outputs_match(run.stdout_text, problem.samples[i].expected_output)) {
            result.verdict = {VerdictCategory::WrongAnswer, "Wrong Answer" + where};
        } else {
            result.runs.push_back(std::move(run));
            continue;
        }
        result.runs.push_back(std::move(run));
        return result;  // first failure wins
    }

    result.verdict = {VerdictCategory::Accepted, "Accepted"};
    return result;
}

}  // namespace cg
