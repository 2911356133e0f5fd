#include "codegauntlet/judging.hpp"

#include "codegauntlet/error.hpp"
#include "codegauntlet/failpoint.hpp"

namespace cg {

void JudgeConfig::validate() const {
    if (rate_limit_s < 0) throw ConfigError("judge.rate_limit_s must be >= 0");
    if (!(poll_interval_s > 0)) throw ConfigError("judge.poll_interval_s must be > 0");
    if (poll_timeout_s < poll_interval_s)
        throw ConfigError("judge.poll_timeout_s must be >= poll_interval_s");
    if (backend == JudgeBackendKind::Remote && judge_url.empty())
        throw ConfigError("judge.judge_url is required for the remote backend");
    if (backend == JudgeBackendKind::Local && local.interpreter_command.empty())
        throw ConfigError("judge.local.interpreter_command must not be empty");
}

std::pair<Verdict, std::string> LocalJudgeBackend::judge(const Problem& problem,
                                                         const std::string& code) {
    return {judge_locally(problem, code, config_).verdict, "local"};
}

std::pair<Verdict, std::string> RemoteJudgeBackend::judge(const Problem& problem,
                                                          const std::string& code) {
    const std::string ref = client_.submit(problem.id, problem.submission_language, code);
    return {client_.poll_verdict(ref), ref};
}

std::unique_ptr<VerdictBackend> make_verdict_backend(const JudgeConfig& config,
                                                     TimeSource* time_source) {
    config.validate();
    if (config.backend == JudgeBackendKind::Local)
        return std::make_unique<LocalJudgeBackend>(config.local);

    RemoteJudgeConfig rc;
    rc.judge_url = config.judge_url;
    rc.auth_token = load_judge_token_from_env();
    rc.rate_limit_s = config.rate_limit_s;
    rc.poll_interval_s = config.poll_interval_s;
    rc.poll_timeout_s = config.poll_timeout_s;
    rc.max_retries = config.max_retries;
    return std::make_unique<RemoteJudgeBackend>(std::move(rc), time_source);
}

PassSummary run_submission_pass(const ProblemCorpus& corpus, const std::string& model,
                                VerdictBackend& backend, const std::filesystem::path& store_dir,
                                TimeSource& time_source) {
    if (!solutions_exist(store_dir, model))
        throw ConfigError("no solutions store for model \"" + model +
                          "\"; run the generation pass first");
    const SolutionsFile solutions = load_solutions(store_dir, model);

    auto cp = read_checkpoint(store_dir, PassKind::Submission, model);
    const std::size_t start = resume_index(corpus, cp);

    SubmissionsFile store = load_submissions(store_dir, model);
    store.model = model;
    for (std::size_t i = 0; i < start; ++i) {
        if (!store.entries.contains(corpus.problems[i].id))
            throw StoreError("submissions store for model \"" + model + "\" is missing problem \"" +
                             corpus.problems[i].id +
                             "\" which the checkpoint says was processed; restore the store file or "
                             "delete the checkpoint to re-judge");
    }

    PassSummary summary;
    summary.skipped = start;

    if (corpus.problems.empty() && !std::filesystem::exists(submissions_path(store_dir, model)))
        save_submissions(store_dir, store);

    for (std::size_t i = start; i < corpus.problems.size(); ++i) {
        const Problem& problem = corpus.problems[i];

        if (!store.entries.contains(problem.id)) {
            auto sol = solutions.entries.find(problem.id);
            if (sol == solutions.entries.end())
                throw StoreError("solutions store for model \"" + model + "\" has no record for \"" +
                                 problem.id + "\"; rerun the generation pass");

            SubmissionRecord rec;
            rec.judged_at = time_source.now_iso8601_utc();
            if (sol->second.failed() || sol->second.code.empty()) {
                // Unusable submission: judged as a compile failure by rule,
                // without spending a backend call.
                rec.verdict = {VerdictCategory::CompileError, "Compile Error: empty submission"};
                rec.submission_ref = "local";
            } else {
                auto [verdict, ref] = backend.judge(problem, sol->second.code);
                rec.verdict = std::move(verdict);
                rec.submission_ref = std::move(ref);
            }

            store.entries.emplace(problem.id, std::move(rec));
            save_submissions(store_dir, store);
            failpoint::fire("submission_pass.after_store_write");
        }
        // else: record from a crash that beat its checkpoint; adopt it.

        write_checkpoint(store_dir, Checkpoint{PassKind::Submission, model, problem.id,
                                               static_cast<std::uint64_t>(i + 1)});
        failpoint::fire("submission_pass.after_checkpoint");
        ++summary.succeeded;
    }
    return summary;
}

}  // namespace cg
