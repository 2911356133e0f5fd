#ifndef CG_TESTS_FIXTURES_HPP
#define CG_TESTS_FIXTURES_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "codegauntlet/corpus.hpp"
#include "codegauntlet/mock_llm_server.hpp"
#include "codegauntlet/time_source.hpp"
#include "codegauntlet/verdict.hpp"

namespace cgtest {

// mkdtemp-backed scratch directory, removed on destruction.
class TempDir {
  public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    const std::filesystem::path& path() const { return path_; }

  private:
    std::filesystem::path path_;
};

// Ten Python problems spanning all three tiers. Statements embed the
// problem id so the mock runtime can match prompts to scripts.
cg::ProblemCorpus fixture_corpus();

// Scripted model responses per problem id; the code inside is real Python
// whose local-judge verdict is designed per fixture_verdicts().
const std::map<std::string, std::string>& fixture_responses();
const std::map<std::string, cg::VerdictCategory>& fixture_verdicts();

// Installs fixture_responses() on the server with small real delays.
void script_fixture(cg::MockLlmServer& server);

// Deterministic generation durations (seconds) in canonical corpus order,
// fed to FakeTimeSource so stores and reports are byte-reproducible.
std::vector<double> fixture_generation_durations();

// Pushes one duration per corpus problem starting at `from_index`.
void push_fixture_durations(cg::FakeTimeSource& ts, std::size_t from_index = 0);

// One problem + solution code per tracked category for exercising the local
// judge; the pair deterministically judges to exactly that category.
cg::Problem verdict_problem(cg::VerdictCategory cat);
std::string verdict_code(cg::VerdictCategory cat);

}  // namespace cgtest

#endif
