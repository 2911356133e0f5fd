#ifndef CODEGAUNTLET_RUNTIME_CLIENT_HPP
#define CODEGAUNTLET_RUNTIME_CLIENT_HPP

#include <memory>
#include <optional>
#include <string>

#include "codegauntlet/time_source.hpp"
#include "json.hpp"

namespace cg {

// Where and how to reach one model on the LLM runtime.
struct RuntimeEndpoint {
    std::string base_url;  // e.g. "http://127.0.0.1:11434"
    std::string model_name;
    double request_timeout_s = 300.0;
    int max_retries = 2;
    double retry_backoff_s = 1.0;          // fixed pause between attempts
    nlohmann::json options;                // decoding options, passed through verbatim
};

struct GenerationOutcome {
    std::string raw_response;
    double generation_time_s = 0.0;        // request dispatch to final byte
    int retries = 0;                       // transport retries that were needed
    std::optional<std::string> error;      // set when all attempts failed

    bool ok() const { return !error.has_value(); }
};

// One completed prompt -> response exchange. Implemented over HTTP for the
// real runtime; tests may substitute a scripted backend.
class GenerationBackend {
  public:
    virtual ~GenerationBackend() = default;
    virtual GenerationOutcome generate(const std::string& prompt) = 0;
};

// Ollama-compatible client: POST {base_url}/api/generate with
// {"model", "prompt", "stream": false}; the reply's "response" field holds
// the text. Retries transport failures (connect/timeout/non-200/bad body)
// up to max_retries with a fixed backoff; a well-formed model reply is never
// retried. Generation time is measured around each full HTTP exchange.
class HttpRuntimeClient final : public GenerationBackend {
  public:
    // `time_source` may outlive-borrow: caller keeps ownership. Null uses a
    // process-wide SystemTimeSource.
    explicit HttpRuntimeClient(RuntimeEndpoint endpoint, TimeSource* time_source = nullptr);
    ~HttpRuntimeClient() override;

    GenerationOutcome generate(const std::string& prompt) override;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace cg

#endif
