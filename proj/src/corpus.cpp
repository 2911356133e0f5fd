#include "codegauntlet/corpus.hpp"

#include <algorithm>
#include <set>

#include "codegauntlet/atomic_file.hpp"
#include "codegauntlet/error.hpp"
#include "json.hpp"

namespace cg {

using nlohmann::json;

std::optional<std::size_t> ProblemCorpus::index_of(const std::string& id) const {
    auto it = std::lower_bound(problems.begin(), problems.end(), id,
                               [](const Problem& p, const std::string& key) { return p.id < key; });
    if (it == problems.end() || it->id != id) return std::nullopt;
    return static_cast<std::size_t>(it - problems.begin());
}

const Problem* ProblemCorpus::find(const std::string& id) const {
    auto idx = index_of(id);
    return idx ? &problems[*idx] : nullptr;
}

const char* to_string(Tier t) {
    switch (t) {
        case Tier::Easy: return "Easy";
        case Tier::Medium: return "Medium";
        case Tier::Hard: return "Hard";
    }
    return "?";
}

void DifficultyTiering::validate() const {
    if (!(1.0 < easy_upper && easy_upper < medium_upper && medium_upper <= 10.0)) {
        throw ConfigError("invalid difficulty tiering: require 1.0 < easy_upper < medium_upper <= 10.0, got " +
                          std::to_string(easy_upper) + " / " + std::to_string(medium_upper));
    }
}

Tier tier_of(double difficulty, const DifficultyTiering& tiering) {
    if (difficulty < tiering.easy_upper) return Tier::Easy;
    if (difficulty < tiering.medium_upper) return Tier::Medium;
    return Tier::Hard;
}

namespace {

std::string require_string(const json& obj, const char* field, const std::string& ctx) {
    auto it = obj.find(field);
    if (it == obj.end() || !it->is_string())
        throw StoreError(ctx + ": missing or non-string field \"" + field + "\"");
    return it->get<std::string>();
}

double require_number(const json& obj, const char* field, const std::string& ctx) {
    auto it = obj.find(field);
    if (it == obj.end() || !it->is_number())
        throw StoreError(ctx + ": missing or non-numeric field \"" + field + "\"");
    return it->get<double>();
}

Problem parse_problem(const json& jp, const std::string& origin) {
    if (!jp.is_object()) throw StoreError(origin + ": problem entry is not an object");
    const std::string id = require_string(jp, "id", origin + ": problem");
    if (id.empty()) throw StoreError(origin + ": problem with empty id");
    const std::string ctx = origin + ": problem \"" + id + "\"";

    Problem p;
    p.id = id;
    p.title = require_string(jp, "title", ctx);
    p.difficulty = require_number(jp, "difficulty", ctx);
    if (p.difficulty < 1.0 || p.difficulty > 10.0)
        throw StoreError(ctx + ": difficulty " + std::to_string(p.difficulty) + " outside [1.0, 10.0]");
    p.statement = require_string(jp, "statement", ctx);
    p.cpu_time_limit_s = require_number(jp, "cpu_time_limit_s", ctx);
    if (p.cpu_time_limit_s <= 0) throw StoreError(ctx + ": cpu_time_limit_s must be positive");
    p.memory_limit_mib = require_number(jp, "memory_limit_mib", ctx);
    if (p.memory_limit_mib <= 0) throw StoreError(ctx + ": memory_limit_mib must be positive");
    p.submission_language = require_string(jp, "submission_language", ctx);

    auto samples = jp.find("samples");
    if (samples == jp.end() || !samples->is_array())
        throw StoreError(ctx + ": missing or non-array field \"samples\"");
    for (const auto& js : *samples) {
        SamplePair s;
        s.input = require_string(js, "input", ctx + " sample");
        s.expected_output = require_string(js, "output", ctx + " sample");
        p.samples.push_back(std::move(s));
    }
    return p;
}

}  // namespace

ProblemCorpus parse_corpus(const std::string& json_text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw StoreError(origin + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) throw StoreError(origin + ": top level is not an object");
    auto ver = doc.find("version");
    if (ver == doc.end() || !ver->is_number_integer())
        throw StoreError(origin + ": missing integer field \"version\"");
    if (ver->get<int>() != kCorpusSchemaVersion)
        throw StoreError(origin + ": unsupported schema version " + std::to_string(ver->get<int>()));
    auto probs = doc.find("problems");
    if (probs == doc.end() || !probs->is_array())
        throw StoreError(origin + ": missing array field \"problems\"");

    ProblemCorpus corpus;
    corpus.version = kCorpusSchemaVersion;
    for (const auto& jp : *probs) corpus.problems.push_back(parse_problem(jp, origin));

    std::sort(corpus.problems.begin(), corpus.problems.end(),
              [](const Problem& a, const Problem& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < corpus.problems.size(); ++i) {
        if (corpus.problems[i].id == corpus.problems[i - 1].id)
            throw StoreError(origin + ": duplicate problem id \"" + corpus.problems[i].id + "\"");
    }
    return corpus;
}

ProblemCorpus load_corpus(const std::filesystem::path& path) {
    auto text = read_file(path);
    if (!text) throw StoreError("corpus file not found: '" + path.string() + "'");
    return parse_corpus(*text, path.string());
}

std::string serialize_corpus(const ProblemCorpus& corpus) {
    json jproblems = json::array();
    for (const auto& p : corpus.problems) {
        json jsamples = json::array();
        for (const auto& s : p.samples) jsamples.push_back({{"input", s.input}, {"output", s.expected_output}});
        jproblems.push_back({{"id", p.id},
                             {"title", p.title},
                             {"difficulty", p.difficulty},
                             {"statement", p.statement},
                             {"samples", std::move(jsamples)},
                             {"cpu_time_limit_s", p.cpu_time_limit_s},
                             {"memory_limit_mib", p.memory_limit_mib},
                             {"submission_language", p.submission_language}});
    }
    json doc{{"version", corpus.version}, {"problems", std::move(jproblems)}};
    return doc.dump(2) + "\n";
}

void save_corpus(const ProblemCorpus& corpus, const std::filesystem::path& path) {
    atomic_write(path, serialize_corpus(corpus));
}

}  // namespace cg
