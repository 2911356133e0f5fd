#ifndef CODEGAUNTLET_STORE_PATHS_HPP
#define CODEGAUNTLET_STORE_PATHS_HPP

#include <filesystem>
#include <string>

namespace cg {

enum class PassKind { Generation, Submission };

const char* to_string(PassKind k);

// Model names may contain characters that are hostile in filenames
// (e.g. "qwen2.5-coder:7b"); everything outside [A-Za-z0-9._-] maps to '_'.
// The JSON payloads keep the exact model name.
std::string sanitize_model_for_filename(const std::string& model);

std::filesystem::path solutions_path(const std::filesystem::path& store_dir, const std::string& model);
std::filesystem::path submissions_path(const std::filesystem::path& store_dir, const std::string& model);
std::filesystem::path checkpoint_path(const std::filesystem::path& store_dir, PassKind kind,
                                      const std::string& model);

}  // namespace cg

#endif
