#ifndef CODEGAUNTLET_MOCK_LLM_SERVER_HPP
#define CODEGAUNTLET_MOCK_LLM_SERVER_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace cg {

// In-process stand-in for the LLM runtime, speaking the same wire protocol
// as the real thing: POST /api/generate with {"model","prompt","stream"},
// replying {"response": ...}. Scripted per prompt-key: the first key found
// as a substring of the incoming prompt selects the entry (fixture problems
// embed their id in the statement for exactly this purpose).
class MockLlmServer {
  public:
    struct Entry {
        std::string response_text;
        double delay_s = 0.0;  // served after sleeping this long
    };

    struct Request {
        std::string model;
        std::string prompt;
        std::string matched_key;  // empty when no key matched
    };

    MockLlmServer();
    ~MockLlmServer();
    MockLlmServer(const MockLlmServer&) = delete;
    MockLlmServer& operator=(const MockLlmServer&) = delete;

    void script(const std::string& prompt_key, Entry entry);
    void set_default_response(std::string text);
    // The next n requests get HTTP 500 before any scripted handling.
    void fail_next_requests(int n);

    // Starts serving on 127.0.0.1 at an ephemeral port; returns base URL.
    std::string start();
    void stop();

    std::vector<Request> requests() const;
    std::uint64_t request_count() const;
    std::map<std::string, std::uint64_t> requests_per_key() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace cg

#endif
