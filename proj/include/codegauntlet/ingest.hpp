#ifndef CODEGAUNTLET_INGEST_HPP
#define CODEGAUNTLET_INGEST_HPP

#include <filesystem>
#include <string>

#include "codegauntlet/corpus.hpp"

namespace cg {

// Builds a corpus from a pre-mined directory tree, one directory per
// problem:
//
//   <root>/<problem_id>/metadata.json   {"title", "difficulty",
//                                        "cpu_time_limit_s", "memory_limit_mib",
//                                        "submission_language"}
//   <root>/<problem_id>/statement.txt
//   <root>/<problem_id>/samples/<name>.in + <name>.ans   (optional, paired)
//
// Sample pairs are ordered by file name. All malformed problem directories
// are collected and reported in one StoreError; nothing is returned
// partially ingested.
ProblemCorpus ingest_directory(const std::filesystem::path& root);

// Ingest entry point: `input` may be an existing corpus JSON file
// (validated and canonicalized) or a directory tree as above. The result is
// written to `output` atomically; on any validation error no output is
// written.
ProblemCorpus run_ingest(const std::filesystem::path& input, const std::filesystem::path& output);

}  // namespace cg

#endif
