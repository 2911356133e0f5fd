#ifndef CODEGAUNTLET_CONFIG_HPP
#define CODEGAUNTLET_CONFIG_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "codegauntlet/corpus.hpp"
#include "codegauntlet/judging.hpp"
#include "codegauntlet/runtime_client.hpp"

namespace cg {

// Environment variable naming the config file when --config is not given.
inline constexpr const char* kConfigEnvVar = "CODEGAUNTLET_CONFIG";

struct RunConfig {
    std::filesystem::path corpus_path;
    std::filesystem::path store_dir;
    std::filesystem::path report_dir = "reports";
    std::filesystem::path prompt_template_path;  // empty -> built-in template
    std::string run_id = "latest";
    std::vector<RuntimeEndpoint> models;
    DifficultyTiering tiering;
    JudgeConfig judge;
    std::filesystem::path reference_baselines_path;  // optional
    int samples_per_problem = 1;  // reserved knob; only 1 is supported
    int histogram_bins = 20;

    const RuntimeEndpoint* find_model(const std::string& name) const;
    // Startup validation: >= 1 model, resolvable paths, sane knobs.
    void validate() const;
};

// Parses a JSON config file. Unknown top-level keys are a ConfigError so
// typos fail loudly.
RunConfig load_run_config(const std::filesystem::path& path);

// Resolves the config path: explicit flag value, else $CODEGAUNTLET_CONFIG.
std::filesystem::path resolve_config_path(const std::string& flag_value);

}  // namespace cg

#endif
