#include "codegauntlet/stores.hpp"

#include "codegauntlet/atomic_file.hpp"
#include "codegauntlet/error.hpp"
#include "json.hpp"

namespace cg {

using nlohmann::json;

namespace {

json parse_store(const std::string& text, const std::filesystem::path& path) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw StoreError("malformed store file '" + path.string() + "': " + e.what());
    }
}

}  // namespace

std::string serialize_solutions(const SolutionsFile& f) {
    json entries = json::object();
    for (const auto& [id, rec] : f.entries) {
        json jr{{"prompt", rec.prompt},
                {"raw_response", rec.raw_response},
                {"code", rec.code},
                {"generation_time_s", rec.generation_time_s},
                {"created_at", rec.created_at}};
        if (rec.error) jr["error"] = *rec.error;
        entries[id] = std::move(jr);
    }
    json doc{{"model", f.model}, {"entries", std::move(entries)}};
    return doc.dump(2) + "\n";
}

std::string serialize_submissions(const SubmissionsFile& f) {
    json entries = json::object();
    for (const auto& [id, rec] : f.entries) {
        entries[id] = {{"verdict", to_string(rec.verdict.category)},
                       {"raw_status", rec.verdict.raw_status},
                       {"submission_ref", rec.submission_ref},
                       {"judged_at", rec.judged_at}};
    }
    json doc{{"model", f.model}, {"entries", std::move(entries)}};
    return doc.dump(2) + "\n";
}

SolutionsFile load_solutions(const std::filesystem::path& store_dir, const std::string& model) {
    SolutionsFile f;
    f.model = model;
    const auto path = solutions_path(store_dir, model);
    auto text = read_file(path);
    if (!text) return f;

    json doc = parse_store(*text, path);
    try {
        f.model = doc.at("model").get<std::string>();
        for (const auto& [id, jr] : doc.at("entries").items()) {
            GenerationRecord rec;
            rec.prompt = jr.at("prompt").get<std::string>();
            rec.raw_response = jr.at("raw_response").get<std::string>();
            rec.code = jr.at("code").get<std::string>();
            rec.generation_time_s = jr.at("generation_time_s").get<double>();
            rec.created_at = jr.at("created_at").get<std::string>();
            if (jr.contains("error")) rec.error = jr.at("error").get<std::string>();
            f.entries.emplace(id, std::move(rec));
        }
    } catch (const json::exception& e) {
        throw StoreError("bad solutions store '" + path.string() + "': " + e.what());
    }
    return f;
}

SubmissionsFile load_submissions(const std::filesystem::path& store_dir, const std::string& model) {
    SubmissionsFile f;
    f.model = model;
    const auto path = submissions_path(store_dir, model);
    auto text = read_file(path);
    if (!text) return f;

    json doc = parse_store(*text, path);
    try {
        f.model = doc.at("model").get<std::string>();
        for (const auto& [id, jr] : doc.at("entries").items()) {
            SubmissionRecord rec;
            rec.verdict.category = verdict_category_from_string(jr.at("verdict").get<std::string>());
            rec.verdict.raw_status = jr.at("raw_status").get<std::string>();
            rec.submission_ref = jr.at("submission_ref").get<std::string>();
            rec.judged_at = jr.at("judged_at").get<std::string>();
            f.entries.emplace(id, std::move(rec));
        }
    } catch (const json::exception& e) {
        throw StoreError("bad submissions store '" + path.string() + "': " + e.what());
    }
    return f;
}

bool solutions_exist(const std::filesystem::path& store_dir, const std::string& model) {
    return std::filesystem::exists(solutions_path(store_dir, model));
}

void save_solutions(const std::filesystem::path& store_dir, const SolutionsFile& f) {
    atomic_write(solutions_path(store_dir, f.model), serialize_solutions(f));
}

void save_submissions(const std::filesystem::path& store_dir, const SubmissionsFile& f) {
    atomic_write(submissions_path(store_dir, f.model), serialize_submissions(f));
}

}  // namespace cg
