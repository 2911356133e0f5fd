#ifndef CODEGAUNTLET_VERDICT_HPP
#define CODEGAUNTLET_VERDICT_HPP

#include <array>
#include <string>

namespace cg {

// The six tracked judging outcomes plus the catch-all. Other is kept in the
// stores but excluded from per-difficulty outcome tables.
enum class VerdictCategory {
    Accepted,
    CompileError,
    WrongAnswer,
    RunTimeError,
    TimeLimitExceeded,
    MemoryLimitExceeded,
    Other,
};

inline constexpr std::array<VerdictCategory, 6> kTrackedCategories = {
    VerdictCategory::Accepted,          VerdictCategory::CompileError,
    VerdictCategory::WrongAnswer,       VerdictCategory::RunTimeError,
    VerdictCategory::TimeLimitExceeded, VerdictCategory::MemoryLimitExceeded,
};

const char* to_string(VerdictCategory c);
// Human-readable judge-style label ("Wrong Answer").
const char* display_name(VerdictCategory c);
VerdictCategory verdict_category_from_string(const std::string& s);  // throws StoreError

struct Verdict {
    VerdictCategory category = VerdictCategory::Other;
    std::string raw_status;  // backend string, preserved verbatim

    bool operator==(const Verdict&) const = default;
};

// Case-insensitive mapping of known judge status strings to categories;
// anything unrecognized becomes Other with raw_status preserved.
Verdict classify_verdict(const std::string& raw_status);

}  // namespace cg

#endif
