#include <fstream>

#include "codegauntlet/atomic_file.hpp"
#include "codegauntlet/error.hpp"
#include "codegauntlet/extract.hpp"
#include "codegauntlet/prompt.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cg;

namespace {
Problem two_sample_problem() {
    Problem p;
    p.id = "px";
    p.statement = "Do the thing.";
    p.submission_language = "python";
    p.samples = {{"1 2\n", "3\n"}, {"4 5\n", "9\n"}};
    return p;
}
}  // namespace

TEST_CASE("template without placeholders renders unchanged") {
    Problem p = two_sample_problem();
    p.statement = "S";
    CHECK(build_prompt(p, {"{statement}"}) == "S");
    CHECK(build_prompt(p, {"no placeholders at all"}) == "no placeholders at all");
    CHECK(build_prompt(p, {""}) == "");
}

TEST_CASE("samples render as Input/Output blocks in corpus order") {
    const Problem p = two_sample_problem();
    const std::string rendered = build_prompt(p, {"{samples}"});
    CHECK(rendered == "Input:\n1 2\n\nOutput:\n3\n\n\nInput:\n4 5\n\nOutput:\n9\n");

    const std::string first = "Input:\n1 2\n";
    const std::string second = "Input:\n4 5\n";
    CHECK(rendered.find(first) != std::string::npos);
    CHECK(rendered.find(second) != std::string::npos);
    CHECK(rendered.find(first) < rendered.find(second));
}

TEST_CASE("all three placeholders substitute; repeated use substitutes every occurrence") {
    const Problem p = two_sample_problem();
    CHECK(build_prompt(p, {"{language}/{language}"}) == "python/python");
    CHECK(build_prompt(p, {"lang={language} stmt={statement}"}) == "lang=python stmt=Do the thing.");
}

TEST_CASE("unknown placeholder is a configuration error") {
    const Problem p = two_sample_problem();
    CHECK_THROWS_AS(build_prompt(p, {"{nonsense}"}), ConfigError);
    CHECK_THROWS_AS(build_prompt(p, {"{statement} {oops}"}), ConfigError);
}

TEST_CASE("braces that are not placeholder tokens pass through") {
    const Problem p = two_sample_problem();
    CHECK(build_prompt(p, {"json: {\"k\": 1}"}) == "json: {\"k\": 1}");
    CHECK(build_prompt(p, {"{Notlower} {}"}) == "{Notlower} {}");
    CHECK(build_prompt(p, {"x{y"}) == "x{y");
}

TEST_CASE("default template golden file") {
    const auto corpus = cgtest::fixture_corpus();
    const std::string prompt = build_prompt(corpus.problems.front(), default_prompt_template());

    const auto golden = read_file(std::filesystem::path(GOLDEN_DIR) / "default_prompt_alpha.txt");
    REQUIRE_MESSAGE(golden.has_value(), "golden file missing");
    CHECK(prompt == *golden);
}

TEST_CASE("extract_code rule 1: labeled fence wins, case-insensitively") {
    CHECK(extract_code("```python\nprint(1)\n```", "python") == "print(1)");
    CHECK(extract_code("prose\n```Python\nprint(1)\n```\nmore prose", "python") == "print(1)");
    CHECK(extract_code("```PYTHON\nx\n```", "python") == "x");
}

TEST_CASE("extract_code rule 2: first fence when no label matches") {
    CHECK(extract_code("```\nplain\n```", "python") == "plain");
    CHECK(extract_code("```cpp\nint x;\n```", "python") == "int x;");
}

TEST_CASE("extract_code rule 3: whole response when no fence exists") {
    CHECK(extract_code("X", "python") == "X");
    CHECK(extract_code("line1\nline2\n", "python") == "line1\nline2\n");
    CHECK(extract_code("", "python") == "");
}

TEST_CASE("extract_code rule priority across fence configurations") {
    // unlabeled fence first, labeled fence second: the label wins
    const std::string both = "```\nwrong\n```\ntext\n```python\nright\n```";
    CHECK(extract_code(both, "python") == "right");

    // two labeled fences: the first matching one wins
    const std::string two = "```python\nfirst\n```\n```python\nsecond\n```";
    CHECK(extract_code(two, "python") == "first");

    // label only differing by case still matches before an earlier unlabeled fence
    const std::string cased = "```\nskip\n```\n```pYtHoN\npicked\n```";
    CHECK(extract_code(cased, "python") == "picked");

    // no matching label anywhere: first fence of any kind
    const std::string other = "prose\n```go\ngo code\n```\n```rust\nrust code\n```";
    CHECK(extract_code(other, "python") == "go code");

    // a ```lang line inside an open block is content, not a closing fence
    const std::string nested = "```\nouter\n```python\ninner\n```";
    CHECK(extract_code(nested, "python") == "outer\n```python\ninner");
}

TEST_CASE("extract_code edge shapes") {
    CHECK(extract_code("```python\n```", "python") == "");  // empty block
    CHECK(extract_code("```python\nunclosed\n", "python") == "unclosed\n");
    CHECK(extract_code("```python\nunclosed", "python") == "unclosed");
    CHECK(extract_code("``` python \nspaced label\n```", "python") == "spaced label");
}

TEST_CASE("extract_code is idempotent on extracted output") {
    const std::vector<std::string> responses = {
        "```python\nprint(1)\nprint(2)\n```",
        "prose\n```\nx = 1\n```\ntrailing",
        "no fences here\njust code\n",
        "```python\nunclosed\n",
    };
    for (const auto& r : responses) {
        const std::string once = extract_code(r, "python");
        CHECK(extract_code(once, "python") == once);
    }
}
