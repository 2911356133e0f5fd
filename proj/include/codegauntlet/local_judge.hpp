#ifndef CODEGAUNTLET_LOCAL_JUDGE_HPP
#define CODEGAUNTLET_LOCAL_JUDGE_HPP

#include <string>
#include <vector>

#include "codegauntlet/corpus.hpp"
#include "codegauntlet/sandbox.hpp"
#include "codegauntlet/verdict.hpp"

namespace cg {

struct LocalJudgeConfig {
    // Interpreter invocation; the solution file path is appended.
    std::vector<std::string> interpreter_command{"python3"};
    bool compile_check = true;
    // Syntax-check invocation, file path appended. Empty derives
    // interpreter_command[0] + {"-m", "py_compile"}.
    std::vector<std::string> compile_command;

    std::vector<std::string> effective_compile_command() const;
};

struct LocalJudgeResult {
    Verdict verdict;
    // One entry per sample actually executed (judging short-circuits on the
    // first failing sample).
    std::vector<ExecutionOutcome> runs;
};

// Exact comparison after normalization: CRLF -> LF, trailing whitespace
// stripped per line, trailing blank lines dropped.
std::string normalize_output(const std::string& text);
bool outputs_match(const std::string& actual, const std::string& expected);

// Sample-I/O judge standing in for the remote judge at desk scale.
// Empty code is a CompileError by definition. Otherwise: optional syntax
// check (failure -> CompileError), then each sample in order under the
// problem's cpu/memory limits with a 2x wall-clock backstop. Per sample the
// first breach wins: time limit, then memory, then nonzero exit, then
// output mismatch; all samples passing is Accepted.
// Throws ConfigError when the interpreter itself cannot be launched.
LocalJudgeResult judge_locally(const Problem& problem, const std::string& code,
                               const LocalJudgeConfig& config);

}  // namespace cg

#endif
