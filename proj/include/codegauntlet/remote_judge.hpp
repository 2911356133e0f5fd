#ifndef CODEGAUNTLET_REMOTE_JUDGE_HPP
#define CODEGAUNTLET_REMOTE_JUDGE_HPP

#include <memory>
#include <string>

#include "codegauntlet/time_source.hpp"
#include "codegauntlet/verdict.hpp"

namespace cg {

struct RemoteJudgeConfig {
    std::string judge_url;         // e.g. "http://127.0.0.1:8080"
    std::string auth_token;        // read from the JUDGE_TOKEN_FILE path
    double rate_limit_s = 10.0;    // minimum spacing between submissions
    double poll_interval_s = 2.0;
    double poll_timeout_s = 120.0;
    int max_retries = 2;           // transport retries per request
    double request_timeout_s = 30.0;
};

// Kattis-style judge API client.
//   POST {judge_url}/submit   multipart fields: problem, language, code file
//   GET  {judge_url}/status/<submission_ref>  -> {"status": "..."}
// Authentication is a bearer token. Submissions are paced at least
// rate_limit_s apart; polling classifies the first terminal status via
// classify_verdict and yields Other("poll-timeout") when the deadline
// passes. Transport/auth failures are retried a bounded number of times and
// then surface as BackendError (the pass aborts, resumable).
class RemoteJudgeClient {
  public:
    RemoteJudgeClient(RemoteJudgeConfig config, TimeSource* time_source = nullptr);
    ~RemoteJudgeClient();

    std::string submit(const std::string& problem_id, const std::string& language,
                       const std::string& code);
    Verdict poll_verdict(const std::string& submission_ref);

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Reads the auth token from the file named by the JUDGE_TOKEN_FILE
// environment variable. Throws ConfigError when unset or unreadable.
std::string load_judge_token_from_env();

// Statuses the judge reports while a submission is still in flight.
bool is_pending_judge_status(const std::string& status);

}  // namespace cg

#endif
