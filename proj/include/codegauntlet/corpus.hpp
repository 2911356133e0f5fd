#ifndef CODEGAUNTLET_CORPUS_HPP
#define CODEGAUNTLET_CORPUS_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace cg {

// One stdin/expected-stdout pair from a problem's public samples.
struct SamplePair {
    std::string input;
    std::string expected_output;

    bool operator==(const SamplePair&) const = default;
};

// One programming task. Difficulty uses the judge's 1.0-10.0 scale.
struct Problem {
    std::string id;
    std::string title;
    double difficulty = 1.0;
    std::string statement;
    std::vector<SamplePair> samples;
    double cpu_time_limit_s = 1.0;
    double memory_limit_mib = 1024.0;
    std::string submission_language;

    bool operator==(const Problem&) const = default;
};

inline constexpr int kCorpusSchemaVersion = 1;

// The consolidated problem file. Problems are always held in canonical
// order: ascending lexicographic by id. Every pipeline pass iterates in
// this order, which is what makes checkpoints meaningful.
struct ProblemCorpus {
    int version = kCorpusSchemaVersion;
    std::vector<Problem> problems;

    // Index of `id` in canonical order, or nullopt.
    std::optional<std::size_t> index_of(const std::string& id) const;
    const Problem* find(const std::string& id) const;

    bool operator==(const ProblemCorpus&) const = default;
};

enum class Tier { Easy, Medium, Hard };

const char* to_string(Tier t);

// Difficulty cut points. Easy: d < easy_upper; Medium: easy_upper <= d <
// medium_upper; Hard otherwise. The defaults are this artifact's choice,
// not a published convention; reports always print the tiering in effect.
struct DifficultyTiering {
    double easy_upper = 3.0;
    double medium_upper = 6.0;

    void validate() const;  // throws ConfigError unless 1 < easy < medium <= 10
};

Tier tier_of(double difficulty, const DifficultyTiering& tiering);

// Parses and validates a corpus. Problems are reordered canonically no
// matter how the file orders them. Throws StoreError naming the offending
// problem id (duplicate id, difficulty out of range, missing field) or the
// byte offset (malformed JSON / invalid UTF-8).
ProblemCorpus load_corpus(const std::filesystem::path& path);

// Same validation applied to an in-memory JSON text (used by ingest).
ProblemCorpus parse_corpus(const std::string& json_text, const std::string& origin);

// Canonical serialization: schema version 1, problems in canonical order,
// two-space indent, trailing newline. Stable bytes for identical corpora.
std::string serialize_corpus(const ProblemCorpus& corpus);

// serialize + atomic_write.
void save_corpus(const ProblemCorpus& corpus, const std::filesystem::path& path);

}  // namespace cg

#endif
