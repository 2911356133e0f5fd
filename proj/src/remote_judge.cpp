#include "codegauntlet/remote_judge.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>

#include "codegauntlet/error.hpp"
#include "httplib.h"
#include "json.hpp"

namespace cg {

using nlohmann::json;

namespace {
SystemTimeSource& default_time_source() {
    static SystemTimeSource ts;
    return ts;
}

std::string lowered(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}
}  // namespace

bool is_pending_judge_status(const std::string& status) {
    const std::string k = lowered(status);
    return k == "new" || k == "queued" || k == "compiling" || k == "running" || k == "pending";
}

std::string load_judge_token_from_env() {
    const char* path = std::getenv("JUDGE_TOKEN_FILE");
    if (!path || !*path)
        throw ConfigError("remote judging needs JUDGE_TOKEN_FILE pointing at a token file");
    std::ifstream in(path);
    if (!in.is_open()) throw ConfigError(std::string("cannot read judge token file '") + path + "'");
    std::string token;
    std::getline(in, token);
    while (!token.empty() && (token.back() == '\r' || token.back() == ' ')) token.pop_back();
    if (token.empty()) throw ConfigError(std::string("judge token file '") + path + "' is empty");
    return token;
}

struct RemoteJudgeClient::Impl {
    RemoteJudgeConfig config;
    TimeSource* time_source;
    httplib::Client client;
    double last_submit_mono = -1e18;

    Impl(RemoteJudgeConfig cfg, TimeSource* ts)
            : config(std::move(cfg)),
              time_source(ts ? ts : &default_time_source()),
              client(config.judge_url) {
        const auto timeout = std::chrono::duration<double>(config.request_timeout_s);
        client.set_connection_timeout(timeout);
        client.set_read_timeout(timeout);
        client.set_write_timeout(timeout);
        client.set_default_headers({{"Authorization", "Bearer " + config.auth_token}});
    }

    // Retries op() on transport failure (no response / HTTP >= 500 / 401)
    // with the configured backoff-free bounded policy, then gives up.
    httplib::Result with_retries(const std::string& what,
                                 const std::function<httplib::Result()>& op) {
        std::string last_error;
        for (int attempt = 0; attempt <= config.max_retries; ++attempt) {
            if (attempt > 0) time_source->sleep_seconds(1.0);
            httplib::Result res = op();
            if (!res) {
                last_error = "transport error: " + httplib::to_string(res.error());
                continue;
            }
            if (res->status == 200) return res;
            last_error = "HTTP " + std::to_string(res->status);
        }
        throw BackendError("judge " + what + " failed after " +
                           std::to_string(config.max_retries + 1) + " attempt(s): " + last_error);
    }
};

RemoteJudgeClient::RemoteJudgeClient(RemoteJudgeConfig config, TimeSource* time_source)
        : impl_(std::make_unique<Impl>(std::move(config), time_source)) {}

RemoteJudgeClient::~RemoteJudgeClient() = default;

std::string RemoteJudgeClient::submit(const std::string& problem_id, const std::string& language,
                                      const std::string& code) {
    auto& im = *impl_;
    const double since = im.time_source->mono_seconds() - im.last_submit_mono;
    if (since < im.config.rate_limit_s) im.time_source->sleep_seconds(im.config.rate_limit_s - since);

    httplib::MultipartFormDataItems items = {
        {"problem", problem_id, "", ""},
        {"language", language, "", ""},
        {"code", code, "solution", "text/plain"},
    };
    httplib::Result res =
        im.with_retries("submit", [&] { return im.client.Post("/submit", items); });
    im.last_submit_mono = im.time_source->mono_seconds();

    json reply = json::parse(res->body, nullptr, false);
    if (reply.is_discarded() || !reply.contains("submission_ref"))
        throw BackendError("judge submit reply lacks \"submission_ref\": " + res->body);
    return reply["submission_ref"].is_string() ? reply["submission_ref"].get<std::string>()
                                               : reply["submission_ref"].dump();
}

Verdict RemoteJudgeClient::poll_verdict(const std::string& submission_ref) {
    auto& im = *impl_;
    const double deadline = im.time_source->mono_seconds() + im.config.poll_timeout_s;
    const std::string path = "/status/" + submission_ref;

    while (true) {
        httplib::Result res = im.with_retries("status", [&] { return im.client.Get(path); });
        json reply = json::parse(res->body, nullptr, false);
        if (reply.is_discarded() || !reply.contains("status") || !reply["status"].is_string())
            throw BackendError("judge status reply lacks \"status\": " + res->body);

        const std::string status = reply["status"].get<std::string>();
        if (!is_pending_judge_status(status)) return classify_verdict(status);

        if (im.time_source->mono_seconds() + im.config.poll_interval_s > deadline)
            return Verdict{VerdictCategory::Other, "poll-timeout"};
        im.time_source->sleep_seconds(im.config.poll_interval_s);
    }
}

}  // namespace cg
