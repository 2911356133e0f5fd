#ifndef CODEGAUNTLET_CHECKPOINT_HPP
#define CODEGAUNTLET_CHECKPOINT_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "codegauntlet/corpus.hpp"
#include "codegauntlet/store_paths.hpp"

namespace cg {

// Last-processed-id sentinel for "nothing processed yet".
inline constexpr const char* kCheckpointNone = "none";

// Resume token for one (pass, model). Updated after every problem, so an
// interruption costs at most one problem of rework.
struct Checkpoint {
    PassKind pass_kind = PassKind::Generation;
    std::string model;
    std::string last_processed_id = kCheckpointNone;
    std::uint64_t processed_count = 0;

    bool operator==(const Checkpoint&) const = default;
};

// Returns nullopt when no checkpoint file exists (fresh run). A file that
// exists but cannot be parsed is never treated as fresh: that would silently
// redo days of work, so it throws StoreError telling the operator to delete
// or repair the file.
std::optional<Checkpoint> read_checkpoint(const std::filesystem::path& store_dir, PassKind kind,
                                          const std::string& model);

void write_checkpoint(const std::filesystem::path& store_dir, const Checkpoint& cp);

// Index of the first unprocessed problem per the checkpoint, validating the
// checkpoint against the corpus (id must exist; processed_count must equal
// its canonical position + 1). Returns 0 for a fresh run.
std::size_t resume_index(const ProblemCorpus& corpus, const std::optional<Checkpoint>& cp);

}  // namespace cg

#endif
