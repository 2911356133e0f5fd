#ifndef CODEGAUNTLET_STORES_HPP
#define CODEGAUNTLET_STORES_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "codegauntlet/store_paths.hpp"
#include "codegauntlet/verdict.hpp"

namespace cg {

// One model response for one problem. `code` is always a substring-derived
// slice of `raw_response`, never synthesized text.
struct GenerationRecord {
    std::string prompt;
    std::string raw_response;
    std::string code;
    double generation_time_s = 0.0;
    std::string created_at;                // ISO-8601 UTC
    std::optional<std::string> error;      // set when generation failed

    bool failed() const { return error.has_value(); }
    bool operator==(const GenerationRecord&) const = default;
};

// solutions_<model>.json: {"model": ..., "entries": {<problem_id>: {...}}}.
// Entries are keyed by problem id, which both deduplicates records and makes
// the serialized form canonical (keys serialize sorted).
struct SolutionsFile {
    std::string model;
    std::map<std::string, GenerationRecord> entries;

    bool operator==(const SolutionsFile&) const = default;
};

struct SubmissionRecord {
    Verdict verdict;
    std::string submission_ref;  // backend id, or "local"
    std::string judged_at;       // ISO-8601 UTC

    bool operator==(const SubmissionRecord&) const = default;
};

// submissions_<model>.json, same shape as SolutionsFile.
struct SubmissionsFile {
    std::string model;
    std::map<std::string, SubmissionRecord> entries;

    bool operator==(const SubmissionsFile&) const = default;
};

std::string serialize_solutions(const SolutionsFile& f);
std::string serialize_submissions(const SubmissionsFile& f);

// Loaders return an empty store when the file does not exist; parse errors
// throw StoreError naming the file.
SolutionsFile load_solutions(const std::filesystem::path& store_dir, const std::string& model);
SubmissionsFile load_submissions(const std::filesystem::path& store_dir, const std::string& model);

bool solutions_exist(const std::filesystem::path& store_dir, const std::string& model);

void save_solutions(const std::filesystem::path& store_dir, const SolutionsFile& f);
void save_submissions(const std::filesystem::path& store_dir, const SubmissionsFile& f);

}  // namespace cg

#endif
