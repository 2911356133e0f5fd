#include <set>

#include "codegauntlet/atomic_file.hpp"
#include "codegauntlet/error.hpp"
#include "codegauntlet/failpoint.hpp"
#include "codegauntlet/generation.hpp"
#include "codegauntlet/mock_llm_server.hpp"
#include "codegauntlet/runtime_client.hpp"
#include "codegauntlet/stores.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cg;

namespace {

RuntimeEndpoint endpoint_for(const std::string& url, int max_retries = 0) {
    RuntimeEndpoint ep;
    ep.base_url = url;
    ep.model_name = "test-model";
    ep.request_timeout_s = 10.0;
    ep.max_retries = max_retries;
    ep.retry_backoff_s = 0.01;
    return ep;
}

}  // namespace

TEST_CASE("client measures wall-clock around a delayed mock response") {
    MockLlmServer server;
    server.script("slowkey", {"hello", 0.05});
    const std::string url = server.start();

    HttpRuntimeClient client(endpoint_for(url));
    const auto out = client.generate("prompt mentioning slowkey");
    REQUIRE(out.ok());
    CHECK(out.raw_response == "hello");
    CHECK(out.generation_time_s >= 0.05);
    CHECK(out.generation_time_s <= 0.05 + 0.5);  // scheduling slack budget
    CHECK(out.retries == 0);
}

TEST_CASE("transport failure retries once then succeeds") {
    MockLlmServer server;
    server.set_default_response("recovered");
    server.fail_next_requests(1);
    const std::string url = server.start();

    HttpRuntimeClient client(endpoint_for(url, /*max_retries=*/2));
    const auto out = client.generate("p");
    REQUIRE(out.ok());
    CHECK(out.raw_response == "recovered");
    CHECK(out.retries == 1);
    CHECK(server.request_count() == 2);
}

TEST_CASE("unreachable endpoint with zero retries yields a failed outcome") {
    HttpRuntimeClient client(endpoint_for("http://127.0.0.1:1", 0));
    const auto out = client.generate("p");
    CHECK_FALSE(out.ok());
    CHECK(out.raw_response.empty());
    CHECK(out.error->find("attempt") != std::string::npos);
}

TEST_CASE("well-formed replies are never retried") {
    MockLlmServer server;
    server.set_default_response("once");
    const std::string url = server.start();
    HttpRuntimeClient client(endpoint_for(url, 5));
    const auto out = client.generate("p");
    REQUIRE(out.ok());
    CHECK(server.request_count() == 1);
}

TEST_CASE("generation pass: fresh run produces one record per problem") {
    cgtest::TempDir dir;
    const auto corpus = cgtest::fixture_corpus();
    MockLlmServer server;
    cgtest::script_fixture(server);
    const std::string url = server.start();

    FakeTimeSource clock;
    cgtest::push_fixture_durations(clock);
    HttpRuntimeClient client(endpoint_for(url), &clock);

    const auto summary = run_generation_pass(corpus, "test-model", client, default_prompt_template(),
                                             dir.path(), clock);
    CHECK(summary.succeeded == 10);
    CHECK(summary.failed == 0);
    CHECK(summary.skipped == 0);

    const auto store = load_solutions(dir.path(), "test-model");
    REQUIRE(store.entries.size() == 10);
    for (const auto& p : corpus.problems) {
        REQUIRE(store.entries.contains(p.id));
        const auto& rec = store.entries.at(p.id);
        CHECK_FALSE(rec.failed());
        CHECK(rec.raw_response == cgtest::fixture_responses().at(p.id));
        // code is a slice of the raw response
        CHECK(rec.raw_response.find(rec.code) != std::string::npos);
    }
    // scripted durations land verbatim in the records (canonical order)
    const auto durations = cgtest::fixture_generation_durations();
    for (std::size_t i = 0; i < corpus.problems.size(); ++i)
        CHECK(store.entries.at(corpus.problems[i].id).generation_time_s == durations[i]);

    const auto cp = read_checkpoint(dir.path(), PassKind::Generation, "test-model");
    REQUIRE(cp.has_value());
    CHECK(cp->last_processed_id == "juliet");
    CHECK(cp->processed_count == 10);

    // one request per problem
    CHECK(server.request_count() == 10);
}

TEST_CASE("generation pass: completed checkpoint means zero backend calls") {
    cgtest::TempDir dir;
    const auto corpus = cgtest::fixture_corpus();
    MockLlmServer server;
    cgtest::script_fixture(server);
    const std::string url = server.start();

    FakeTimeSource clock;
    cgtest::push_fixture_durations(clock);
    HttpRuntimeClient client(endpoint_for(url), &clock);
    run_generation_pass(corpus, "m", client, default_prompt_template(), dir.path(), clock);
    const auto first_bytes = read_file(solutions_path(dir.path(), "m"));
    const auto requests_after_first = server.request_count();

    const auto summary =
        run_generation_pass(corpus, "m", client, default_prompt_template(), dir.path(), clock);
    CHECK(summary.skipped == 10);
    CHECK(summary.succeeded == 0);
    CHECK(server.request_count() == requests_after_first);  // no new calls
    CHECK(read_file(solutions_path(dir.path(), "m")) == first_bytes);  // bytes untouched
}

TEST_CASE("generation pass: kill/resume converges to the uninterrupted bytes, exactly-once") {
    const auto corpus = cgtest::fixture_corpus();

    // Reference: uninterrupted run with the same deterministic clock script.
    cgtest::TempDir ref_dir;
    std::string reference_bytes;
    {
        MockLlmServer server;
        cgtest::script_fixture(server);
        FakeTimeSource clock;
        cgtest::push_fixture_durations(clock);
        HttpRuntimeClient client(endpoint_for(server.start()), &clock);
        run_generation_pass(corpus, "m", client, default_prompt_template(), ref_dir.path(), clock);
        reference_bytes = *read_file(solutions_path(ref_dir.path(), "m"));
    }

    // Kill at each problem boundary (store-write and checkpoint failpoints).
    for (const char* fp : {"generation_pass.after_store_write", "generation_pass.after_checkpoint"}) {
        for (int after : {0, 3, 9}) {
            CAPTURE(fp);
            CAPTURE(after);
            cgtest::TempDir dir;
            MockLlmServer server;
            cgtest::script_fixture(server);
            const std::string url = server.start();

            FakeTimeSource clock;
            cgtest::push_fixture_durations(clock);

            {
                HttpRuntimeClient client(endpoint_for(url), &clock);
                failpoint::arm(fp, after);
                CHECK_THROWS_AS(run_generation_pass(corpus, "m", client, default_prompt_template(),
                                                    dir.path(), clock),
                                failpoint::Injected);
                failpoint::clear();
            }
            // Stores survived the crash parseable.
            CHECK_NOTHROW(load_solutions(dir.path(), "m"));

            std::uint64_t count_before = 0;
            if (auto cp = read_checkpoint(dir.path(), PassKind::Generation, "m"))
                count_before = cp->processed_count;

            {
                HttpRuntimeClient client(endpoint_for(url), &clock);
                const auto summary = run_generation_pass(corpus, "m", client,
                                                         default_prompt_template(), dir.path(), clock);
                CHECK(summary.total() == 10);
            }

            // Monotone progress and final bytes identical to uninterrupted run.
            const auto cp = read_checkpoint(dir.path(), PassKind::Generation, "m");
            REQUIRE(cp.has_value());
            CHECK(cp->processed_count == 10);
            CHECK(cp->processed_count >= count_before);
            CHECK(*read_file(solutions_path(dir.path(), "m")) == reference_bytes);

            // Exactly-once: every problem hit the backend exactly once overall.
            const auto per_key = server.requests_per_key();
            for (const auto& p : corpus.problems) {
                CAPTURE(p.id);
                CHECK(per_key.at(p.id) == 1);
            }
        }
    }
}

TEST_CASE("generation failure is recorded, consumes a checkpoint slot, pass continues") {
    cgtest::TempDir dir;
    auto corpus = cgtest::fixture_corpus();
    corpus.problems.resize(3);  // alpha, bravo, charlie

    MockLlmServer server;
    server.script("alpha", {"```python\nok\n```", 0.0});
    server.script("charlie", {"```python\nok\n```", 0.0});
    // bravo gets transport failures beyond the retry budget
    const std::string url = server.start();

    FakeTimeSource clock;
    for (int i = 0; i < 3; ++i) clock.push_duration(0.1);

    RuntimeEndpoint ep = endpoint_for(url, 0);
    class FailingOnBravo : public GenerationBackend {
      public:
        FailingOnBravo(GenerationBackend& inner) : inner_(inner) {}
        GenerationOutcome generate(const std::string& prompt) override {
            if (prompt.find("bravo") != std::string::npos)
                return {.raw_response = "", .generation_time_s = 0.0, .retries = 0,
                        .error = "transport error (after 1 attempt(s))"};
            return inner_.generate(prompt);
        }
      private:
        GenerationBackend& inner_;
    };
    HttpRuntimeClient inner(ep, &clock);
    FailingOnBravo backend(inner);

    const auto summary =
        run_generation_pass(corpus, "m", backend, default_prompt_template(), dir.path(), clock);
    CHECK(summary.succeeded == 2);
    CHECK(summary.failed == 1);

    const auto store = load_solutions(dir.path(), "m");
    REQUIRE(store.entries.size() == 3);
    CHECK(store.entries.at("bravo").failed());
    CHECK(store.entries.at("bravo").code.empty());
    CHECK(store.entries.at("bravo").error->find("transport") != std::string::npos);

    const auto cp = read_checkpoint(dir.path(), PassKind::Generation, "m");
    REQUIRE(cp.has_value());
    CHECK(cp->processed_count == 3);  // failed problem still advanced the checkpoint
}

TEST_CASE("missing store records behind the checkpoint abort rather than regenerate") {
    cgtest::TempDir dir;
    auto corpus = cgtest::fixture_corpus();
    corpus.problems.resize(2);

    MockLlmServer server;
    cgtest::script_fixture(server);
    FakeTimeSource clock;
    cgtest::push_fixture_durations(clock);
    HttpRuntimeClient client(endpoint_for(server.start()), &clock);
    run_generation_pass(corpus, "m", client, default_prompt_template(), dir.path(), clock);

    // Simulate a lost store with a surviving checkpoint.
    std::filesystem::remove(solutions_path(dir.path(), "m"));
    CHECK_THROWS_AS(
        run_generation_pass(corpus, "m", client, default_prompt_template(), dir.path(), clock),
        StoreError);
}
