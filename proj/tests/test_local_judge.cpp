#include "codegauntlet/error.hpp"
#include "codegauntlet/local_judge.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cg;
using VC = VerdictCategory;

TEST_CASE("output normalization") {
    CHECK(normalize_output("a\r\nb\r\n") == "a\nb");
    CHECK(normalize_output("a  \nb\t\n") == "a\nb");
    CHECK(normalize_output("a\nb\n\n\n") == "a\nb");
    CHECK(normalize_output("") == "");
    CHECK(normalize_output("\n\n") == "");
    CHECK(outputs_match("6\n", "6"));
    CHECK(outputs_match("6 \r\n", "6\n"));
    CHECK_FALSE(outputs_match("6", "7"));
    CHECK_FALSE(outputs_match("a\nb", "a b"));  // interior whitespace still counts
}

TEST_CASE("empty code is CompileError without any execution") {
    const auto result = judge_locally(cgtest::verdict_problem(VC::Accepted), "", {});
    CHECK(result.verdict.category == VC::CompileError);
    CHECK(result.runs.empty());
}

TEST_CASE("echo fixture is Accepted") {
    const auto result =
        judge_locally(cgtest::verdict_problem(VC::Accepted), cgtest::verdict_code(VC::Accepted), {});
    CHECK(result.verdict.category == VC::Accepted);
    CHECK(result.runs.size() == 1);
}

TEST_CASE("wrong constant is WrongAnswer on sample 1") {
    const auto result = judge_locally(cgtest::verdict_problem(VC::WrongAnswer),
                                      cgtest::verdict_code(VC::WrongAnswer), {});
    CHECK(result.verdict.category == VC::WrongAnswer);
    CHECK(result.verdict.raw_status == "Wrong Answer on sample 1");
}

TEST_CASE("syntax error is CompileError when the compile check is on") {
    LocalJudgeConfig config;
    config.compile_check = true;
    const auto result = judge_locally(cgtest::verdict_problem(VC::CompileError),
                                      cgtest::verdict_code(VC::CompileError), config);
    CHECK(result.verdict.category == VC::CompileError);
}

TEST_CASE("syntax error without compile check surfaces as RunTimeError") {
    LocalJudgeConfig config;
    config.compile_check = false;
    const auto result = judge_locally(cgtest::verdict_problem(VC::CompileError),
                                      cgtest::verdict_code(VC::CompileError), config);
    CHECK(result.verdict.category == VC::RunTimeError);
}

TEST_CASE("raising program is RunTimeError") {
    const auto result = judge_locally(cgtest::verdict_problem(VC::RunTimeError),
                                      cgtest::verdict_code(VC::RunTimeError), {});
    CHECK(result.verdict.category == VC::RunTimeError);
}

TEST_CASE("infinite loop hits the time limit with elapsed >= limit") {
    const auto problem = cgtest::verdict_problem(VC::TimeLimitExceeded);
    const auto result = judge_locally(problem, cgtest::verdict_code(VC::TimeLimitExceeded), {});
    CHECK(result.verdict.category == VC::TimeLimitExceeded);
    REQUIRE(result.runs.size() == 1);
    CHECK(result.runs.back().elapsed_s >= problem.cpu_time_limit_s);
}

TEST_CASE("allocation loop hits the memory limit") {
    const auto result = judge_locally(cgtest::verdict_problem(VC::MemoryLimitExceeded),
                                      cgtest::verdict_code(VC::MemoryLimitExceeded), {});
    REQUIRE(result.runs.size() == 1);
    if (!result.runs.back().peak_memory_mib.has_value()) {
        MESSAGE("peak memory unmeasured on this platform; MemoryLimitExceeded not enforceable");
        return;
    }
    CHECK(result.verdict.category == VC::MemoryLimitExceeded);
    CHECK(*result.runs.back().peak_memory_mib > 64.0);
}

TEST_CASE("first failure wins across samples") {
    Problem p = cgtest::verdict_problem(VC::Accepted);
    p.samples = {{"", "ok\n"}, {"", "never\n"}};  // second sample would be WA
    const auto result = judge_locally(p, "print('ok')\n", {});
    CHECK(result.verdict.category == VC::WrongAnswer);
    CHECK(result.verdict.raw_status == "Wrong Answer on sample 2");
    CHECK(result.runs.size() == 2);
}

TEST_CASE("all-verdicts fixture is deterministic across repeated runs") {
    for (int round = 0; round < 2; ++round) {
        for (VC cat : kTrackedCategories) {
            if (cat == VC::MemoryLimitExceeded) continue;  // covered above, slow-ish
            CAPTURE(to_string(cat));
            const auto result =
                judge_locally(cgtest::verdict_problem(cat), cgtest::verdict_code(cat), {});
            CHECK(result.verdict.category == cat);
        }
    }
}

TEST_CASE("missing interpreter is a hard setup error, not a verdict") {
    LocalJudgeConfig config;
    config.interpreter_command = {"definitely-not-a-real-interpreter-xyz"};
    config.compile_check = false;
    CHECK_THROWS_AS(
        judge_locally(cgtest::verdict_problem(VC::Accepted), "print('ok')\n", config),
        ConfigError);
}

TEST_CASE("problem with no samples is vacuously Accepted") {
    Problem p = cgtest::verdict_problem(VC::Accepted);
    p.samples.clear();
    const auto result = judge_locally(p, "print('ok')\n", {});
    CHECK(result.verdict.category == VC::Accepted);
    CHECK(result.runs.empty());
}
