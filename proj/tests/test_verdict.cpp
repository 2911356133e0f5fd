#include "codegauntlet/verdict.hpp"
#include "doctest.h"

using namespace cg;

TEST_CASE("known judge statuses map to their categories") {
    CHECK(classify_verdict("Accepted").category == VerdictCategory::Accepted);
    CHECK(classify_verdict("Wrong Answer").category == VerdictCategory::WrongAnswer);
    CHECK(classify_verdict("Run Time Error").category == VerdictCategory::RunTimeError);
    CHECK(classify_verdict("Time Limit Exceeded").category == VerdictCategory::TimeLimitExceeded);
    CHECK(classify_verdict("Memory Limit Exceeded").category == VerdictCategory::MemoryLimitExceeded);
    CHECK(classify_verdict("Compile Error").category == VerdictCategory::CompileError);
}

TEST_CASE("classification is case-insensitive") {
    CHECK(classify_verdict("time limit exceeded").category == VerdictCategory::TimeLimitExceeded);
    CHECK(classify_verdict("ACCEPTED").category == VerdictCategory::Accepted);
    CHECK(classify_verdict("wRoNg AnSwEr").category == VerdictCategory::WrongAnswer);
}

TEST_CASE("unknown statuses become Other with the raw string preserved") {
    const Verdict v = classify_verdict("Judge Error");
    CHECK(v.category == VerdictCategory::Other);
    CHECK(v.raw_status == "Judge Error");

    CHECK(classify_verdict("Frozen").category == VerdictCategory::Other);
    CHECK(classify_verdict("").category == VerdictCategory::Other);
}

TEST_CASE("category names round-trip") {
    for (VerdictCategory c : kTrackedCategories) CHECK(verdict_category_from_string(to_string(c)) == c);
    CHECK(verdict_category_from_string("Other") == VerdictCategory::Other);
    CHECK_THROWS(verdict_category_from_string("NotACategory"));
}
