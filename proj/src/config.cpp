#include "codegauntlet/config.hpp"

#include <cstdlib>
#include <set>

#include "codegauntlet/atomic_file.hpp"
#include "codegauntlet/error.hpp"
#include "json.hpp"

namespace cg {

using nlohmann::json;

const RuntimeEndpoint* RunConfig::find_model(const std::string& name) const {
    for (const auto& m : models)
        if (m.model_name == name) return &m;
    return nullptr;
}

void RunConfig::validate() const {
    if (corpus_path.empty()) throw ConfigError("config: corpus_path is required");
    if (store_dir.empty()) throw ConfigError("config: store_dir is required");
    if (models.empty()) throw ConfigError("config: at least one model is required");
    std::set<std::string> names;
    for (const auto& m : models) {
        if (m.model_name.empty()) throw ConfigError("config: model with empty name");
        if (m.base_url.empty())
            throw ConfigError("config: model \"" + m.model_name + "\" has no base_url");
        if (!(m.request_timeout_s > 0))
            throw ConfigError("config: model \"" + m.model_name + "\" needs request_timeout_s > 0");
        if (m.max_retries < 0)
            throw ConfigError("config: model \"" + m.model_name + "\" needs max_retries >= 0");
        if (!names.insert(m.model_name).second)
            throw ConfigError("config: duplicate model name \"" + m.model_name + "\"");
    }
    tiering.validate();
    judge.validate();
    if (samples_per_problem != 1)
        throw ConfigError("config: samples_per_problem " + std::to_string(samples_per_problem) +
                          " is not supported yet; the knob is reserved for multi-sample pass@k");
    if (histogram_bins < 1) throw ConfigError("config: histogram_bins must be >= 1");
    if (!prompt_template_path.empty() && !std::filesystem::exists(prompt_template_path))
        throw ConfigError("config: prompt_template_path '" + prompt_template_path.string() +
                          "' does not exist");
    if (!reference_baselines_path.empty() && !std::filesystem::exists(reference_baselines_path))
        throw ConfigError("config: reference_baselines_path '" + reference_baselines_path.string() +
                          "' does not exist");
}

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& known, const std::string& ctx) {
    for (const auto& [key, _] : obj.items())
        if (!known.contains(key)) throw ConfigError(ctx + ": unknown key \"" + key + "\"");
}

RuntimeEndpoint parse_model(const json& jm) {
    reject_unknown_keys(jm, {"name", "base_url", "request_timeout_s", "max_retries",
                             "retry_backoff_s", "options"},
                        "config model entry");
    RuntimeEndpoint ep;
    ep.model_name = jm.at("name").get<std::string>();
    ep.base_url = jm.at("base_url").get<std::string>();
    if (jm.contains("request_timeout_s")) ep.request_timeout_s = jm.at("request_timeout_s").get<double>();
    if (jm.contains("max_retries")) ep.max_retries = jm.at("max_retries").get<int>();
    if (jm.contains("retry_backoff_s")) ep.retry_backoff_s = jm.at("retry_backoff_s").get<double>();
    if (jm.contains("options")) ep.options = jm.at("options");  // passed through verbatim
    return ep;
}

JudgeConfig parse_judge(const json& jj) {
    reject_unknown_keys(jj, {"backend", "rate_limit_s", "poll_interval_s", "poll_timeout_s",
                             "max_retries", "judge_url", "local"},
                        "config judge");
    JudgeConfig jc;
    if (jj.contains("backend")) {
        const std::string b = jj.at("backend").get<std::string>();
        if (b == "local") jc.backend = JudgeBackendKind::Local;
        else if (b == "remote") jc.backend = JudgeBackendKind::Remote;
        else throw ConfigError("config: judge.backend must be \"local\" or \"remote\", got \"" + b + "\"");
    }
    if (jj.contains("rate_limit_s")) jc.rate_limit_s = jj.at("rate_limit_s").get<double>();
    if (jj.contains("poll_interval_s")) jc.poll_interval_s = jj.at("poll_interval_s").get<double>();
    if (jj.contains("poll_timeout_s")) jc.poll_timeout_s = jj.at("poll_timeout_s").get<double>();
    if (jj.contains("max_retries")) jc.max_retries = jj.at("max_retries").get<int>();
    if (jj.contains("judge_url")) jc.judge_url = jj.at("judge_url").get<std::string>();
    if (jj.contains("local")) {
        const json& jl = jj.at("local");
        reject_unknown_keys(jl, {"interpreter_command", "compile_check", "compile_command"},
                            "config judge.local");
        if (jl.contains("interpreter_command"))
            jc.local.interpreter_command = jl.at("interpreter_command").get<std::vector<std::string>>();
        if (jl.contains("compile_check")) jc.local.compile_check = jl.at("compile_check").get<bool>();
        if (jl.contains("compile_command"))
            jc.local.compile_command = jl.at("compile_command").get<std::vector<std::string>>();
    }
    return jc;
}

}  // namespace

RunConfig load_run_config(const std::filesystem::path& path) {
    auto text = read_file(path);
    if (!text) throw ConfigError("config file not found: '" + path.string() + "'");
    json doc = json::parse(*text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw ConfigError("config file '" + path.string() + "' is not a JSON object");

    reject_unknown_keys(doc,
                        {"corpus_path", "store_dir", "report_dir", "prompt_template_path", "run_id",
                         "models", "tiering", "judge", "reference_baselines_path",
                         "samples_per_problem", "histogram_bins"},
                        "config");

    RunConfig cfg;
    try {
        cfg.corpus_path = doc.at("corpus_path").get<std::string>();
        cfg.store_dir = doc.at("store_dir").get<std::string>();
        if (doc.contains("report_dir")) cfg.report_dir = doc.at("report_dir").get<std::string>();
        if (doc.contains("prompt_template_path"))
            cfg.prompt_template_path = doc.at("prompt_template_path").get<std::string>();
        if (doc.contains("run_id")) cfg.run_id = doc.at("run_id").get<std::string>();
        for (const auto& jm : doc.at("models")) cfg.models.push_back(parse_model(jm));
        if (doc.contains("tiering")) {
            const json& jt = doc.at("tiering");
            reject_unknown_keys(jt, {"easy_upper", "medium_upper"}, "config tiering");
            if (jt.contains("easy_upper")) cfg.tiering.easy_upper = jt.at("easy_upper").get<double>();
            if (jt.contains("medium_upper"))
                cfg.tiering.medium_upper = jt.at("medium_upper").get<double>();
        }
        if (doc.contains("judge")) cfg.judge = parse_judge(doc.at("judge"));
        if (doc.contains("reference_baselines_path"))
            cfg.reference_baselines_path = doc.at("reference_baselines_path").get<std::string>();
        if (doc.contains("samples_per_problem"))
            cfg.samples_per_problem = doc.at("samples_per_problem").get<int>();
        if (doc.contains("histogram_bins")) cfg.histogram_bins = doc.at("histogram_bins").get<int>();
    } catch (const json::exception& e) {
        throw ConfigError("bad config file '" + path.string() + "': " + e.what());
    }
    return cfg;
}

std::filesystem::path resolve_config_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv(kConfigEnvVar); env && *env) return env;
    throw ConfigError(std::string("no config file: pass --config or set ") + kConfigEnvVar);
}

}  // namespace cg
