#ifndef CODEGAUNTLET_MOCK_JUDGE_SERVER_HPP
#define CODEGAUNTLET_MOCK_JUDGE_SERVER_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace cg {

// In-process judge speaking the remote protocol exactly:
//   POST /submit  (multipart: problem, language, code)  -> {"submission_ref"}
//   GET  /status/<ref>                                  -> {"status": ...}
// Each submission walks its problem's scripted status sequence one step per
// poll, holding the last status forever. Auth is a bearer token.
class MockJudgeServer {
  public:
    struct Submission {
        std::string ref;
        std::string problem;
        std::string language;
        std::string code;
        double mono_seconds = 0.0;  // arrival time, for rate-limit assertions
    };

    explicit MockJudgeServer(std::string token = "test-token");
    ~MockJudgeServer();
    MockJudgeServer(const MockJudgeServer&) = delete;
    MockJudgeServer& operator=(const MockJudgeServer&) = delete;

    // Status sequence for submissions of `problem_id` (e.g. {"Running",
    // "Running", "Accepted"}). Unscripted problems go straight to Accepted.
    void script_statuses(const std::string& problem_id, std::vector<std::string> statuses);
    void fail_next_submits(int n);  // HTTP 500
    const std::string& token() const;

    std::string start();
    void stop();

    std::vector<Submission> submissions() const;
    std::uint64_t poll_count(const std::string& ref) const;
    std::map<std::string, std::uint64_t> submissions_per_problem() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace cg

#endif
