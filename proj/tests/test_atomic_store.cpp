#include <filesystem>
#include <random>

#include "codegauntlet/atomic_file.hpp"
#include "codegauntlet/checkpoint.hpp"
#include "codegauntlet/error.hpp"
#include "codegauntlet/failpoint.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cg;
namespace fs = std::filesystem;

TEST_CASE("atomic_write replaces content, readers never see partials") {
    cgtest::TempDir dir;
    const fs::path target = dir.path() / "state.json";

    atomic_write(target, "A");
    CHECK(*read_file(target) == "A");
    atomic_write(target, "B");
    CHECK(*read_file(target) == "B");
}

TEST_CASE("atomic_write failure at every stage leaves prior content intact") {
    cgtest::TempDir dir;
    const fs::path target = dir.path() / "state.json";
    atomic_write(target, "prior");

    for (const char* stage : {"atomic_write.open", "atomic_write.write", "atomic_write.flush",
                              "atomic_write.sync", "atomic_write.rename"}) {
        CAPTURE(stage);
        failpoint::arm(stage);
        CHECK_THROWS_AS(atomic_write(target, "partial-next"), failpoint::Injected);
        failpoint::clear();
        CHECK(*read_file(target) == "prior");
    }
}

TEST_CASE("temp residue is inert and recognizable") {
    cgtest::TempDir dir;
    const fs::path target = dir.path() / "state.json";
    atomic_write(target, "prior");

    failpoint::arm("atomic_write.rename");
    CHECK_THROWS(atomic_write(target, "never-lands"));
    failpoint::clear();

    // The destination survived; any leftover sibling carries the marker.
    CHECK(*read_file(target) == "prior");
    for (const auto& entry : fs::directory_iterator(dir.path())) {
        if (entry.path() == target) continue;
        CHECK(is_temp_artifact(entry.path()));
    }
    CHECK_FALSE(is_temp_artifact(target));
}

TEST_CASE("large payload round-trips byte-exact") {
    cgtest::TempDir dir;
    const fs::path target = dir.path() / "blob.bin";

    std::string payload(50u << 20, '\0');  // 50 MiB
    std::mt19937 rng(12345);
    for (auto& c : payload) c = static_cast<char>(rng() & 0xff);

    atomic_write(target, payload);
    CHECK(*read_file(target) == payload);
}

TEST_CASE("atomic_write_if_changed skips identical content") {
    cgtest::TempDir dir;
    const fs::path target = dir.path() / "state.json";
    CHECK(atomic_write_if_changed(target, "x"));
    const auto mtime = fs::last_write_time(target);
    CHECK_FALSE(atomic_write_if_changed(target, "x"));
    CHECK(fs::last_write_time(target) == mtime);
    CHECK(atomic_write_if_changed(target, "y"));
}

TEST_CASE("checkpoint round-trip and fresh-directory absence") {
    cgtest::TempDir dir;
    CHECK_FALSE(read_checkpoint(dir.path(), PassKind::Submission, "m1").has_value());

    const Checkpoint cp{PassKind::Submission, "m1", "hello", 5};
    write_checkpoint(dir.path(), cp);
    const auto back = read_checkpoint(dir.path(), PassKind::Submission, "m1");
    REQUIRE(back.has_value());
    CHECK(*back == cp);

    // other (pass, model) slots remain independent
    CHECK_FALSE(read_checkpoint(dir.path(), PassKind::Generation, "m1").has_value());
    CHECK_FALSE(read_checkpoint(dir.path(), PassKind::Submission, "m2").has_value());
}

TEST_CASE("interrupted checkpoint write preserves the previous checkpoint") {
    cgtest::TempDir dir;
    write_checkpoint(dir.path(), {PassKind::Generation, "m1", "alpha", 1});

    failpoint::arm("atomic_write.rename");
    CHECK_THROWS(write_checkpoint(dir.path(), {PassKind::Generation, "m1", "bravo", 2}));
    failpoint::clear();

    const auto back = read_checkpoint(dir.path(), PassKind::Generation, "m1");
    REQUIRE(back.has_value());
    CHECK(back->last_processed_id == "alpha");
    CHECK(back->processed_count == 1);
}

TEST_CASE("corrupt checkpoint is an error, not a silent restart") {
    cgtest::TempDir dir;
    const auto path = checkpoint_path(dir.path(), PassKind::Generation, "m1");
    atomic_write(path, "{not json");
    CHECK_THROWS_AS(read_checkpoint(dir.path(), PassKind::Generation, "m1"), StoreError);

    atomic_write(path, R"({"pass_kind":"generation","model":"m1"})");  // missing fields
    CHECK_THROWS_AS(read_checkpoint(dir.path(), PassKind::Generation, "m1"), StoreError);
}

TEST_CASE("resume_index validates checkpoint against the corpus") {
    const auto corpus = cgtest::fixture_corpus();

    CHECK(resume_index(corpus, std::nullopt) == 0);
    CHECK(resume_index(corpus, Checkpoint{PassKind::Generation, "m", kCheckpointNone, 0}) == 0);
    CHECK(resume_index(corpus, Checkpoint{PassKind::Generation, "m", "alpha", 1}) == 1);
    CHECK(resume_index(corpus, Checkpoint{PassKind::Generation, "m", "juliet", 10}) == 10);

    CHECK_THROWS_AS(resume_index(corpus, Checkpoint{PassKind::Generation, "m", "zulu", 3}), StoreError);
    CHECK_THROWS_AS(resume_index(corpus, Checkpoint{PassKind::Generation, "m", "bravo", 7}), StoreError);
}

TEST_CASE("model names sanitize into safe store file names") {
    CHECK(sanitize_model_for_filename("qwen2.5-coder:7b") == "qwen2.5-coder_7b");
    CHECK(sanitize_model_for_filename("a/b c") == "a_b_c");
    CHECK(sanitize_model_for_filename("") == "_");
    CHECK(solutions_path("store", "m:x").filename().string() == "solutions_m_x.json");
    CHECK(checkpoint_path("store", PassKind::Generation, "m").filename().string() ==
          "generation_m.checkpoint.json");
}
