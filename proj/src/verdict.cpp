#include "codegauntlet/verdict.hpp"

#include <algorithm>
#include <cctype>

#include "codegauntlet/error.hpp"

namespace cg {

const char* to_string(VerdictCategory c) {
    switch (c) {
        case VerdictCategory::Accepted: return "Accepted";
        case VerdictCategory::CompileError: return "CompileError";
        case VerdictCategory::WrongAnswer: return "WrongAnswer";
        case VerdictCategory::RunTimeError: return "RunTimeError";
        case VerdictCategory::TimeLimitExceeded: return "TimeLimitExceeded";
        case VerdictCategory::MemoryLimitExceeded: return "MemoryLimitExceeded";
        case VerdictCategory::Other: return "Other";
    }
    return "?";
}

const char* display_name(VerdictCategory c) {
    switch (c) {
        case VerdictCategory::Accepted: return "Accepted";
        case VerdictCategory::CompileError: return "Compile Error";
        case VerdictCategory::WrongAnswer: return "Wrong Answer";
        case VerdictCategory::RunTimeError: return "Run Time Error";
        case VerdictCategory::TimeLimitExceeded: return "Time Limit Exceeded";
        case VerdictCategory::MemoryLimitExceeded: return "Memory Limit Exceeded";
        case VerdictCategory::Other: return "Other";
    }
    return "?";
}

VerdictCategory verdict_category_from_string(const std::string& s) {
    for (VerdictCategory c : kTrackedCategories)
        if (s == to_string(c)) return c;
    if (s == "Other") return VerdictCategory::Other;
    throw StoreError("unknown verdict category \"" + s + "\"");
}

namespace {
std::string lowered(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}
}  // namespace

Verdict classify_verdict(const std::string& raw_status) {
    const std::string key = lowered(raw_status);
    VerdictCategory cat = VerdictCategory::Other;
    if (key == "accepted") cat = VerdictCategory::Accepted;
    else if (key == "compile error") cat = VerdictCategory::CompileError;
    else if (key == "wrong answer") cat = VerdictCategory::WrongAnswer;
    else if (key == "run time error") cat = VerdictCategory::RunTimeError;
    else if (key == "time limit exceeded") cat = VerdictCategory::TimeLimitExceeded;
    else if (key == "memory limit exceeded") cat = VerdictCategory::MemoryLimitExceeded;
    return Verdict{cat, raw_status};
}

}  // namespace cg
