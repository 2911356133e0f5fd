#include "codegauntlet/mock_llm_server.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "codegauntlet/error.hpp"
#include "httplib.h"
#include "json.hpp"

namespace cg {

using nlohmann::json;

struct MockLlmServer::Impl {
    httplib::Server server;
    std::thread thread;
    std::string base_url;

    mutable std::mutex mutex;
    std::vector<std::pair<std::string, Entry>> entries;  // insertion order decides match priority
    std::string default_response = "no scripted response";
    int fail_budget = 0;
    std::vector<Request> log;
};

MockLlmServer::MockLlmServer() : impl_(std::make_unique<Impl>()) {
    impl_->server.Post("/api/generate", [this](const httplib::Request& req, httplib::Response& res) {
        json body = json::parse(req.body, nullptr, false);
        if (body.is_discarded() || !body.contains("model") || !body.contains("prompt")) {
            res.status = 400;
            res.set_content("{\"error\":\"bad request\"}", "application/json");
            return;
        }
        const std::string prompt = body["prompt"].get<std::string>();

        Entry entry;
        std::string matched;
        bool fail_this = false;
        {
            std::lock_guard<std::mutex> lock(impl_->mutex);
            if (impl_->fail_budget > 0) {
                --impl_->fail_budget;
                fail_this = true;
            }
            entry.response_text = impl_->default_response;
            for (const auto& [key, e] : impl_->entries) {
                if (prompt.find(key) != std::string::npos) {
                    entry = e;
                    matched = key;
                    break;
                }
            }
            impl_->log.push_back({body["model"].get<std::string>(), prompt, matched});
        }
        if (fail_this) {
            res.status = 500;
            res.set_content("{\"error\":\"injected failure\"}", "application/json");
            return;
        }
        if (entry.delay_s > 0)
            std::this_thread::sleep_for(std::chrono::duration<double>(entry.delay_s));

        json reply{{"model", body["model"]}, {"response", entry.response_text}, {"done", true}};
        res.set_content(reply.dump(), "application/json");
    });
}

MockLlmServer::~MockLlmServer() { stop(); }

void MockLlmServer::script(const std::string& prompt_key, Entry entry) {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    impl_->entries.emplace_back(prompt_key, std::move(entry));
}

void MockLlmServer::set_default_response(std::string text) {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    impl_->default_response = std::move(text);
}

void MockLlmServer::fail_next_requests(int n) {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    impl_->fail_budget = n;
}

std::string MockLlmServer::start() {
    const int port = impl_->server.bind_to_any_port("127.0.0.1");
    if (port <= 0) throw ConfigError("mock LLM server: cannot bind a port");
    impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
    impl_->base_url = "http://127.0.0.1:" + std::to_string(port);
    return impl_->base_url;
}

void MockLlmServer::stop() {
    if (impl_->thread.joinable()) {
        impl_->server.stop();
        impl_->thread.join();
    }
}

std::vector<MockLlmServer::Request> MockLlmServer::requests() const {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    return impl_->log;
}

std::uint64_t MockLlmServer::request_count() const {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    return impl_->log.size();
}

std::map<std::string, std::uint64_t> MockLlmServer::requests_per_key() const {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    std::map<std::string, std::uint64_t> counts;
    for (const auto& r : impl_->log) ++counts[r.matched_key];
    return counts;
}

}  // namespace cg
