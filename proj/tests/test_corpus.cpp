#include <random>

#include "codegauntlet/atomic_file.hpp"
#include "codegauntlet/corpus.hpp"
#include "codegauntlet/error.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cg;

namespace {

std::string corpus_json(const std::string& problems_json) {
    return R"({"version":1,"problems":[)" + problems_json + "]}";
}

std::string problem_json(const std::string& id, double difficulty = 2.0) {
    return R"({"id":")" + id + R"(","title":"t","difficulty":)" + std::to_string(difficulty) +
           R"(,"statement":"s","samples":[{"input":"1\n","output":"2\n"}],)" +
           R"("cpu_time_limit_s":1.0,"memory_limit_mib":256.0,"submission_language":"python"})";
}

}  // namespace

TEST_CASE("load orders problems canonically regardless of file order") {
    cgtest::TempDir dir;
    const auto path = dir.path() / "kattis_problems.json";
    atomic_write(path, corpus_json(problem_json("zulu") + "," + problem_json("alpha") + "," +
                                   problem_json("mike")));
    const auto corpus = load_corpus(path);
    REQUIRE(corpus.problems.size() == 3);
    CHECK(corpus.problems[0].id == "alpha");
    CHECK(corpus.problems[1].id == "mike");
    CHECK(corpus.problems[2].id == "zulu");
}

TEST_CASE("duplicate id fails naming the id") {
    cgtest::TempDir dir;
    const auto path = dir.path() / "c.json";
    atomic_write(path, corpus_json(problem_json("hello") + "," + problem_json("hello")));
    CHECK_THROWS_WITH_AS(load_corpus(path), doctest::Contains("hello"), StoreError);
}

TEST_CASE("fixture corpus loads with all ten problems") {
    cgtest::TempDir dir;
    const auto path = dir.path() / "c.json";
    save_corpus(cgtest::fixture_corpus(), path);
    const auto corpus = load_corpus(path);
    CHECK(corpus.problems.size() == 10);
    CHECK(corpus.problems.front().difficulty == 1.2);
    CHECK(corpus.problems.back().id == "juliet");
}

TEST_CASE("validation errors name the offending problem") {
    cgtest::TempDir dir;
    const auto path = dir.path() / "c.json";

    SUBCASE("difficulty out of range") {
        atomic_write(path, corpus_json(problem_json("bad", 12.0)));
        CHECK_THROWS_WITH_AS(load_corpus(path), doctest::Contains("bad"), StoreError);
    }
    SUBCASE("difficulty below scale") {
        atomic_write(path, corpus_json(problem_json("low", 0.5)));
        CHECK_THROWS_AS(load_corpus(path), StoreError);
    }
    SUBCASE("missing field") {
        atomic_write(path, corpus_json(R"({"id":"incomplete","title":"t"})"));
        CHECK_THROWS_WITH_AS(load_corpus(path), doctest::Contains("incomplete"), StoreError);
    }
    SUBCASE("malformed JSON reports byte offset") {
        atomic_write(path, "{\"version\":1,\"problems\":[}");
        CHECK_THROWS_WITH_AS(load_corpus(path), doctest::Contains("byte"), StoreError);
    }
    SUBCASE("wrong schema version") {
        atomic_write(path, R"({"version":7,"problems":[]})");
        CHECK_THROWS_AS(load_corpus(path), StoreError);
    }
    SUBCASE("invalid UTF-8 is a load error") {
        atomic_write(path, corpus_json(problem_json("ok")).insert(20, "\xff\xfe"));
        CHECK_THROWS_AS(load_corpus(path), StoreError);
    }
}

TEST_CASE("save/load round-trip is identity on random corpora") {
    std::mt19937 rng(20260810);
    cgtest::TempDir dir;
    for (int iter = 0; iter < 25; ++iter) {
        ProblemCorpus corpus;
        const int n = static_cast<int>(rng() % 12);
        for (int i = 0; i < n; ++i) {
            Problem p;
            p.id = "prob" + std::to_string(rng() % 1000);
            p.title = "T" + std::to_string(rng() % 100);
            p.difficulty = 1.0 + (rng() % 91) / 10.0;
            p.statement = "line one\nline twoé\n";
            const int ns = static_cast<int>(rng() % 3);
            for (int s = 0; s < ns; ++s) p.samples.push_back({std::to_string(rng() % 50) + "\n", "out\n"});
            p.cpu_time_limit_s = 1.0 + (rng() % 5);
            p.memory_limit_mib = 64.0 * (1 + rng() % 8);
            p.submission_language = "python";
            if (!corpus.index_of(p.id)) corpus.problems.push_back(std::move(p));
        }
        std::sort(corpus.problems.begin(), corpus.problems.end(),
                  [](const Problem& a, const Problem& b) { return a.id < b.id; });

        const auto path = dir.path() / ("c" + std::to_string(iter) + ".json");
        save_corpus(corpus, path);
        CHECK(load_corpus(path) == corpus);

        // Stable bytes: two loads and re-saves serialize identically.
        const auto text1 = serialize_corpus(load_corpus(path));
        const auto text2 = serialize_corpus(load_corpus(path));
        CHECK(text1 == text2);
    }
}

TEST_CASE("tier_of half-open intervals") {
    const DifficultyTiering tiering{3.0, 6.0};
    CHECK(tier_of(1.0, tiering) == Tier::Easy);
    CHECK(tier_of(2.999, tiering) == Tier::Easy);
    CHECK(tier_of(3.0, tiering) == Tier::Medium);  // boundary belongs upward
    CHECK(tier_of(5.9, tiering) == Tier::Medium);
    CHECK(tier_of(6.0, tiering) == Tier::Hard);
    CHECK(tier_of(10.0, tiering) == Tier::Hard);

    const DifficultyTiering other{2.0, 8.0};
    CHECK(tier_of(1.0, other) == Tier::Easy);  // 1.0 is Easy for any valid tiering
}

TEST_CASE("tiering invariants enforced") {
    CHECK_THROWS_AS((DifficultyTiering{1.0, 6.0}.validate()), ConfigError);
    CHECK_THROWS_AS((DifficultyTiering{6.0, 3.0}.validate()), ConfigError);
    CHECK_THROWS_AS((DifficultyTiering{3.0, 10.5}.validate()), ConfigError);
    CHECK_NOTHROW((DifficultyTiering{3.0, 6.0}.validate()));
    CHECK_NOTHROW((DifficultyTiering{1.5, 10.0}.validate()));
}
