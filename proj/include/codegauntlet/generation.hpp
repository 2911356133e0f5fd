#ifndef CODEGAUNTLET_GENERATION_HPP
#define CODEGAUNTLET_GENERATION_HPP

#include <cstdint>
#include <filesystem>
#include <string>

#include "codegauntlet/checkpoint.hpp"
#include "codegauntlet/corpus.hpp"
#include "codegauntlet/prompt.hpp"
#include "codegauntlet/runtime_client.hpp"
#include "codegauntlet/stores.hpp"
#include "codegauntlet/time_source.hpp"

namespace cg {

struct PassSummary {
    std::uint64_t succeeded = 0;
    std::uint64_t failed = 0;
    std::uint64_t skipped = 0;  // already checkpointed before this run

    std::uint64_t total() const { return succeeded + failed + skipped; }
};

// One sequential generation pass for one model. Iterates the corpus in
// canonical order starting after the checkpoint; per problem it queries the
// backend, appends the record to solutions_<model>.json with an atomic
// write, and only then advances the checkpoint. A record that reached the
// store before a crash but missed its checkpoint is adopted on resume
// without re-contacting the backend, so backend calls stay exactly-once.
// Failed generations produce a record with empty code and the error string;
// they still consume a checkpoint slot so one bad problem cannot wedge a
// multi-day run.
PassSummary run_generation_pass(const ProblemCorpus& corpus, const std::string& model,
                                GenerationBackend& backend, const PromptTemplate& tmpl,
                                const std::filesystem::path& store_dir, TimeSource& time_source);

}  // namespace cg

#endif
