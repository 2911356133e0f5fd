#include "codegauntlet/ingest.hpp"

#include <algorithm>
#include <map>

#include "codegauntlet/atomic_file.hpp"
#include "codegauntlet/error.hpp"
#include "json.hpp"

namespace cg {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

Problem ingest_problem_dir(const fs::path& dir) {
    Problem p;
    p.id = dir.filename().string();

    const auto meta_text = read_file(dir / "metadata.json");
    if (!meta_text) throw StoreError("missing metadata.json");
    json meta = json::parse(*meta_text, nullptr, false);
    if (meta.is_discarded()) throw StoreError("malformed metadata.json");
    try {
        p.title = meta.at("title").get<std::string>();
        p.difficulty = meta.at("difficulty").get<double>();
        p.cpu_time_limit_s = meta.at("cpu_time_limit_s").get<double>();
        p.memory_limit_mib = meta.at("memory_limit_mib").get<double>();
        p.submission_language = meta.at("submission_language").get<std::string>();
    } catch (const json::exception& e) {
        throw StoreError(std::string("bad metadata.json: ") + e.what());
    }

    const auto statement = read_file(dir / "statement.txt");
    if (!statement) throw StoreError("missing statement.txt");
    p.statement = *statement;
    try {
        json(p.statement).dump();  // strict UTF-8 gate; stores are UTF-8 only
    } catch (const json::exception&) {
        throw StoreError("statement.txt is not valid UTF-8");
    }

    const fs::path samples_dir = dir / "samples";
    if (fs::is_directory(samples_dir)) {
        std::map<std::string, SamplePair> by_name;
        std::map<std::string, std::pair<bool, bool>> seen;  // has .in / has .ans
        for (const auto& entry : fs::directory_iterator(samples_dir)) {
            if (!entry.is_regular_file() || is_temp_artifact(entry.path())) continue;
            const fs::path file = entry.path();
            const std::string stem = file.stem().string();
            const std::string ext = file.extension().string();
            if (ext == ".in") {
                by_name[stem].input = *read_file(file);
                seen[stem].first = true;
            } else if (ext == ".ans") {
                by_name[stem].expected_output = *read_file(file);
                seen[stem].second = true;
            }
        }
        for (const auto& [name, have] : seen) {
            if (!have.first || !have.second)
                throw StoreError("sample \"" + name + "\" is missing its " +
                                 (have.first ? ".ans" : ".in") + " file");
        }
        for (auto& [name, pair] : by_name) {
            try {
                json(pair.input).dump();
                json(pair.expected_output).dump();
            } catch (const json::exception&) {
                throw StoreError("sample \"" + name + "\" is not valid UTF-8");
            }
            p.samples.push_back(std::move(pair));
        }
    }
    return p;
}

}  // namespace

ProblemCorpus ingest_directory(const fs::path& root) {
    if (!fs::is_directory(root)) throw ConfigError("ingest input '" + root.string() + "' is not a directory");

    std::vector<fs::path> problem_dirs;
    for (const auto& entry : fs::directory_iterator(root)) {
        if (entry.is_directory() && !is_temp_artifact(entry.path()))
            problem_dirs.push_back(entry.path());
    }
    std::sort(problem_dirs.begin(), problem_dirs.end());

    ProblemCorpus corpus;
    std::string errors;
    for (const auto& dir : problem_dirs) {
        try {
            corpus.problems.push_back(ingest_problem_dir(dir));
        } catch (const Error& e) {
            errors += "  " + dir.filename().string() + ": " + e.what() + "\n";
        }
    }
    if (!errors.empty())
        throw StoreError("malformed problem directories, nothing written:\n" + errors);

    // Reuse corpus validation (duplicates, ranges, UTF-8) by round-tripping
    // through the canonical serialization.
    return parse_corpus(serialize_corpus(corpus), root.string());
}

ProblemCorpus run_ingest(const fs::path& input, const fs::path& output) {
    ProblemCorpus corpus;
    if (fs::is_directory(input)) {
        corpus = ingest_directory(input);
    } else {
        corpus = load_corpus(input);  // validated pass-through
    }
    save_corpus(corpus, output);
    return corpus;
}

}  // namespace cg
