#include "codegauntlet/mock_judge_server.hpp"

#include <chrono>
#include <mutex>
#include <thread>

#include "codegauntlet/error.hpp"
#include "httplib.h"
#include "json.hpp"

namespace cg {

using nlohmann::json;

namespace {
double mono_now() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}
}  // namespace

struct MockJudgeServer::Impl {
    httplib::Server server;
    std::thread thread;
    std::string token;

    mutable std::mutex mutex;
    std::map<std::string, std::vector<std::string>> scripts;
    int fail_budget = 0;
    std::uint64_t next_ref = 1;
    std::vector<Submission> submissions;
    struct Progress {
        std::string problem;
        std::size_t step = 0;
        std::uint64_t polls = 0;
    };
    std::map<std::string, Progress> progress;  // by ref
};

MockJudgeServer::MockJudgeServer(std::string token) : impl_(std::make_unique<Impl>()) {
    impl_->token = std::move(token);

    auto authorized = [this](const httplib::Request& req) {
        return req.get_header_value("Authorization") == "Bearer " + impl_->token;
    };

    impl_->server.Post("/submit", [this, authorized](const httplib::Request& req, httplib::Response& res) {
        if (!authorized(req)) {
            res.status = 401;
            res.set_content("{\"error\":\"bad token\"}", "application/json");
            return;
        }
        std::lock_guard<std::mutex> lock(impl_->mutex);
        if (impl_->fail_budget > 0) {
            --impl_->fail_budget;
            res.status = 500;
            res.set_content("{\"error\":\"injected failure\"}", "application/json");
            return;
        }
        if (!req.has_file("problem") || !req.has_file("language") || !req.has_file("code")) {
            res.status = 400;
            res.set_content("{\"error\":\"missing multipart field\"}", "application/json");
            return;
        }
        Submission sub;
        sub.ref = "sub-" + std::to_string(impl_->next_ref++);
        sub.problem = req.get_file_value("problem").content;
        sub.language = req.get_file_value("language").content;
        sub.code = req.get_file_value("code").content;
        sub.mono_seconds = mono_now();
        impl_->progress[sub.ref] = {sub.problem, 0, 0};
        impl_->submissions.push_back(sub);

        json reply{{"submission_ref", sub.ref}};
        res.set_content(reply.dump(), "application/json");
    });

    impl_->server.Get(R"(/status/(.+))", [this, authorized](const httplib::Request& req,
                                                            httplib::Response& res) {
        if (!authorized(req)) {
            res.status = 401;
            res.set_content("{\"error\":\"bad token\"}", "application/json");
            return;
        }
        std::lock_guard<std::mutex> lock(impl_->mutex);
        const std::string ref = req.matches[1];
        auto it = impl_->progress.find(ref);
        if (it == impl_->progress.end()) {
            res.status = 404;
            res.set_content("{\"error\":\"unknown submission\"}", "application/json");
            return;
        }
        auto& prog = it->second;
        ++prog.polls;

        std::vector<std::string> script{"Accepted"};
        if (auto sit = impl_->scripts.find(prog.problem); sit != impl_->scripts.end())
            script = sit->second;
        const std::string status = script[std::min(prog.step, script.size() - 1)];
        if (prog.step + 1 < script.size()) ++prog.step;

        json reply{{"status", status}};
        res.set_content(reply.dump(), "application/json");
    });
}

MockJudgeServer::~MockJudgeServer() { stop(); }

void MockJudgeServer::script_statuses(const std::string& problem_id,
                                      std::vector<std::string> statuses) {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    impl_->scripts[problem_id] = std::move(statuses);
}

void MockJudgeServer::fail_next_submits(int n) {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    impl_->fail_budget = n;
}

const std::string& MockJudgeServer::token() const { return impl_->token; }

std::string MockJudgeServer::start() {
    const int port = impl_->server.bind_to_any_port("127.0.0.1");
    if (port <= 0) throw ConfigError("mock judge server: cannot bind a port");
    impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
    return "http://127.0.0.1:" + std::to_string(port);
}

void MockJudgeServer::stop() {
    if (impl_->thread.joinable()) {
        impl_->server.stop();
        impl_->thread.join();
    }
}

std::vector<MockJudgeServer::Submission> MockJudgeServer::submissions() const {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    return impl_->submissions;
}

std::uint64_t MockJudgeServer::poll_count(const std::string& ref) const {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    auto it = impl_->progress.find(ref);
    return it == impl_->progress.end() ? 0 : it->second.polls;
}

std::map<std::string, std::uint64_t> MockJudgeServer::submissions_per_problem() const {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    std::map<std::string, std::uint64_t> counts;
    for (const auto& s : impl_->submissions) ++counts[s.problem];
    return counts;
}

}  // namespace cg
