#include "codegauntlet/generation.hpp"

#include "codegauntlet/error.hpp"
#include "codegauntlet/extract.hpp"
#include "codegauntlet/failpoint.hpp"

namespace cg {

namespace {

// A store holding records the checkpoint does not cover is fine (crash
// between store write and checkpoint write); the reverse means someone lost
// or edited the store and the pass must not silently regenerate.
void check_store_covers_checkpoint(const ProblemCorpus& corpus, const SolutionsFile& store,
                                   std::size_t start_index, const std::string& model) {
    for (std::size_t i = 0; i < start_index; ++i) {
        if (!store.entries.contains(corpus.problems[i].id))
            throw StoreError("solutions store for model \"" + model + "\" is missing problem \"" +
                             corpus.problems[i].id +
                             "\" which the checkpoint says was processed; restore the store file or "
                             "delete the checkpoint to regenerate");
    }
}

}  // namespace

PassSummary run_generation_pass(const ProblemCorpus& corpus, const std::string& model,
                                GenerationBackend& backend, const PromptTemplate& tmpl,
                                const std::filesystem::path& store_dir, TimeSource& time_source) {
    auto cp = read_checkpoint(store_dir, PassKind::Generation, model);
    const std::size_t start = resume_index(corpus, cp);

    SolutionsFile store = load_solutions(store_dir, model);
    store.model = model;
    check_store_covers_checkpoint(corpus, store, start, model);

    PassSummary summary;
    summary.skipped = start;

    if (corpus.problems.empty() && !solutions_exist(store_dir, model)) save_solutions(store_dir, store);

    for (std::size_t i = start; i < corpus.problems.size(); ++i) {
        const Problem& problem = corpus.problems[i];

        auto existing = store.entries.find(problem.id);
        if (existing == store.entries.end()) {
            GenerationRecord rec;
            rec.prompt = build_prompt(problem, tmpl);
            rec.created_at = time_source.now_iso8601_utc();

            GenerationOutcome outcome = backend.generate(rec.prompt);
            rec.raw_response = outcome.raw_response;
            rec.generation_time_s = outcome.generation_time_s;
            rec.error = outcome.error;
            rec.code = outcome.ok() ? extract_code(outcome.raw_response, problem.submission_language) : "";

            store.entries.emplace(problem.id, std::move(rec));
            save_solutions(store_dir, store);
            failpoint::fire("generation_pass.after_store_write");
            existing = store.entries.find(problem.id);
        }
        // else: record survived a crash that beat its checkpoint; adopt it.

        write_checkpoint(store_dir, Checkpoint{PassKind::Generation, model, problem.id,
                                               static_cast<std::uint64_t>(i + 1)});
        failpoint::fire("generation_pass.after_checkpoint");

        if (existing->second.failed()) ++summary.failed;
        else ++summary.succeeded;
    }
    return summary;
}

}  // namespace cg
