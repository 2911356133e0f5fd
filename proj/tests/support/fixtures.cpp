#include "fixtures.hpp"

#include <stdlib.h>

#include <stdexcept>

namespace cgtest {

namespace fs = std::filesystem;

TempDir::TempDir() {
    std::string tmpl = (fs::temp_directory_path() / "cgtest.XXXXXX").string();
    if (!::mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
    path_ = tmpl;
}

TempDir::~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
}

namespace {

cg::Problem doubling_problem(std::string id, double difficulty) {
    cg::Problem p;
    p.id = id;
    p.title = "Double " + id;
    p.difficulty = difficulty;
    p.statement = "Problem " + id + ": read one integer N from standard input and print 2*N.";
    p.samples = {{"3\n", "6\n"}, {"10\n", "20\n"}};
    p.cpu_time_limit_s = 1.0;
    p.memory_limit_mib = 512.0;
    p.submission_language = "python";
    return p;
}

std::string fenced(const std::string& code) { return "```python\n" + code + "```\n"; }

}  // namespace

cg::ProblemCorpus fixture_corpus() {
    cg::ProblemCorpus corpus;
    corpus.problems = {
        doubling_problem("alpha", 1.2),   doubling_problem("bravo", 2.0),
        doubling_problem("charlie", 2.9), doubling_problem("delta", 3.0),
        doubling_problem("echo", 4.5),    doubling_problem("foxtrot", 5.5),
        doubling_problem("golf", 6.0),    doubling_problem("hotel", 7.5),
        doubling_problem("india", 8.8),   doubling_problem("juliet", 9.5),
    };
    return corpus;
}

const std::map<std::string, std::string>& fixture_responses() {
    static const std::map<std::string, std::string> responses = {
        {"alpha", "Here is my solution:\n" + fenced("n=int(input())\nprint(2*n)\n")},
        {"bravo", fenced("n=int(input())\nprint(n+1)\n")},                    // wrong arithmetic
        {"charlie", fenced("import sys\nn=int(sys.stdin.readline())\nprint(n*2)\n")},
        {"delta", fenced("raise RuntimeError('boom')\n")},
        {"echo", fenced("def broken(:\n    pass\n")},                         // syntax error
        {"foxtrot", fenced("n=int(input())\nprint(n+n)\n")},
        {"golf", fenced("print('forty-two')\n")},
        {"hotel", "```\nn=int(input())\nprint(2*n)\n```\nNo label on this fence."},
        {"india", fenced("while True:\n    pass\n")},                         // burns cpu
        {"juliet", fenced("n=int(input())\nprint(2*n)\n")},
    };
    return responses;
}

const std::map<std::string, cg::VerdictCategory>& fixture_verdicts() {
    using VC = cg::VerdictCategory;
    static const std::map<std::string, VC> verdicts = {
        {"alpha", VC::Accepted},   {"bravo", VC::WrongAnswer},
        {"charlie", VC::Accepted}, {"delta", VC::RunTimeError},
        {"echo", VC::CompileError},{"foxtrot", VC::Accepted},
        {"golf", VC::WrongAnswer}, {"hotel", VC::Accepted},
        {"india", VC::TimeLimitExceeded}, {"juliet", VC::Accepted},
    };
    return verdicts;
}

void script_fixture(cg::MockLlmServer& server) {
    double delay = 0.005;
    for (const auto& [id, response] : fixture_responses()) {
        server.script(id, {response, delay});
        delay += 0.005;
    }
}

std::vector<double> fixture_generation_durations() {
    // One value per problem in canonical order; 60.0 is a designed outlier.
    return {12.5, 3.2, 4.1, 5.0, 2.2, 8.8, 60.0, 7.7, 1.1, 9.9};
}

void push_fixture_durations(cg::FakeTimeSource& ts, std::size_t from_index) {
    const auto durations = fixture_generation_durations();
    for (std::size_t i = from_index; i < durations.size(); ++i) ts.push_duration(durations[i]);
}

cg::Problem verdict_problem(cg::VerdictCategory cat) {
    cg::Problem p;
    p.id = std::string("fx-") + cg::to_string(cat);
    p.title = p.id;
    p.difficulty = 2.0;
    p.statement = "Print the word ok.";
    p.samples = {{"", "ok\n"}};
    p.cpu_time_limit_s = 1.0;
    p.memory_limit_mib = 512.0;
    p.submission_language = "python";
    if (cat == cg::VerdictCategory::MemoryLimitExceeded) {
        p.memory_limit_mib = 64.0;
        p.cpu_time_limit_s = 5.0;
    }
    if (cat == cg::VerdictCategory::TimeLimitExceeded) p.cpu_time_limit_s = 1.0;
    return p;
}

std::string verdict_code(cg::VerdictCategory cat) {
    using VC = cg::VerdictCategory;
    switch (cat) {
        case VC::Accepted: return "print('ok')\n";
        case VC::CompileError: return "def broken(:\n    pass\n";
        case VC::WrongAnswer: return "print('nope')\n";
        case VC::RunTimeError: return "raise ValueError('bad')\n";
        case VC::TimeLimitExceeded: return "while True:\n    pass\n";
        case VC::MemoryLimitExceeded:
            return "blocks = []\n"
                   "while True:\n"
                   "    blocks.append(bytearray(8 * 1024 * 1024))\n";
        case VC::Other: return "print('ok')\n";
    }
    return "";
}

}  // namespace cgtest
