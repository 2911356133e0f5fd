#include "codegauntlet/runtime_client.hpp"

#include <cmath>

#include "httplib.h"

namespace cg {

using nlohmann::json;

namespace {
SystemTimeSource& default_time_source() {
    static SystemTimeSource ts;
    return ts;
}
}  // namespace

struct HttpRuntimeClient::Impl {
    RuntimeEndpoint endpoint;
    TimeSource* time_source;
    httplib::Client client;

    Impl(RuntimeEndpoint ep, TimeSource* ts)
            : endpoint(std::move(ep)),
              time_source(ts ? ts : &default_time_source()),
              client(endpoint.base_url) {
        const auto timeout = std::chrono::duration<double>(endpoint.request_timeout_s);
        client.set_connection_timeout(timeout);
        client.set_read_timeout(timeout);
        client.set_write_timeout(timeout);
    }
};

HttpRuntimeClient::HttpRuntimeClient(RuntimeEndpoint endpoint, TimeSource* time_source)
        : impl_(std::make_unique<Impl>(std::move(endpoint), time_source)) {}

HttpRuntimeClient::~HttpRuntimeClient() = default;

GenerationOutcome HttpRuntimeClient::generate(const std::string& prompt) {
    const auto& ep = impl_->endpoint;

    json body{{"model", ep.model_name}, {"prompt", prompt}, {"stream", false}};
    if (!ep.options.is_null() && !ep.options.empty()) body["options"] = ep.options;
    const std::string payload = body.dump();

    GenerationOutcome out;
    std::string last_error = "no attempt made";

    for (int attempt = 0; attempt <= ep.max_retries; ++attempt) {
        if (attempt > 0) {
            impl_->time_source->sleep_seconds(ep.retry_backoff_s);
            out.retries = attempt;
        }

        httplib::Result res;
        const double elapsed = impl_->time_source->time_call(
            [&] { res = impl_->client.Post("/api/generate", payload, "application/json"); });
        out.generation_time_s = elapsed;  // last attempt's wall clock, kept even on failure

        if (!res) {
            last_error = "transport error: " + httplib::to_string(res.error());
            continue;
        }
        if (res->status != 200) {
            last_error = "runtime returned HTTP " + std::to_string(res->status);
            continue;
        }
        json reply = json::parse(res->body, nullptr, false);
        if (reply.is_discarded() || !reply.contains("response") || !reply["response"].is_string()) {
            last_error = "runtime reply missing \"response\" field";
            continue;
        }
        out.raw_response = reply["response"].get<std::string>();
        return out;
    }

    out.error = last_error + " (after " + std::to_string(ep.max_retries + 1) + " attempt(s))";
    return out;
}

}  // namespace cg
