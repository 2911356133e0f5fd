#ifndef CODEGAUNTLET_JUDGING_HPP
#define CODEGAUNTLET_JUDGING_HPP

#include <filesystem>
#include <memory>
#include <string>
#include <utility>

#include "codegauntlet/corpus.hpp"
#include "codegauntlet/generation.hpp"
#include "codegauntlet/local_judge.hpp"
#include "codegauntlet/remote_judge.hpp"
#include "codegauntlet/stores.hpp"

namespace cg {

enum class JudgeBackendKind { Local, Remote };

struct JudgeConfig {
    JudgeBackendKind backend = JudgeBackendKind::Local;
    double rate_limit_s = 10.0;
    double poll_interval_s = 2.0;
    double poll_timeout_s = 120.0;
    int max_retries = 2;
    std::string judge_url;  // remote only
    LocalJudgeConfig local;

    void validate() const;  // rate_limit >= 0, poll_timeout >= poll_interval > 0
};

// One judged submission, whichever backend produced it.
class VerdictBackend {
  public:
    virtual ~VerdictBackend() = default;
    // Returns the verdict and the backend's submission reference.
    virtual std::pair<Verdict, std::string> judge(const Problem& problem, const std::string& code) = 0;
};

class LocalJudgeBackend final : public VerdictBackend {
  public:
    explicit LocalJudgeBackend(LocalJudgeConfig config) : config_(std::move(config)) {}
    std::pair<Verdict, std::string> judge(const Problem& problem, const std::string& code) override;

  private:
    LocalJudgeConfig config_;
};

class RemoteJudgeBackend final : public VerdictBackend {
  public:
    RemoteJudgeBackend(RemoteJudgeConfig config, TimeSource* time_source = nullptr)
            : client_(std::move(config), time_source) {}
    std::pair<Verdict, std::string> judge(const Problem& problem, const std::string& code) override;

  private:
    RemoteJudgeClient client_;
};

// Builds the backend the config asks for; reads the judge token from the
// environment when remote.
std::unique_ptr<VerdictBackend> make_verdict_backend(const JudgeConfig& config,
                                                     TimeSource* time_source = nullptr);

// Judging twin of run_generation_pass: canonical order, checkpoint resume,
// store write before checkpoint advance, crash-adoption on resume.
// Problems whose generation failed (or extracted to empty code) become
// CompileError records without touching the backend.
// Requires solutions_<model>.json to exist (generate must run first).
PassSummary run_submission_pass(const ProblemCorpus& corpus, const std::string& model,
                                VerdictBackend& backend, const std::filesystem::path& store_dir,
                                TimeSource& time_source);

}  // namespace cg

#endif
