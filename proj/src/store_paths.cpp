#include "codegauntlet/store_paths.hpp"

#include <cctype>

namespace cg {

const char* to_string(PassKind k) {
    return k == PassKind::Generation ? "generation" : "submission";
}

std::string sanitize_model_for_filename(const std::string& model) {
    std::string out;
    out.reserve(model.size());
    for (char c : model) {
        const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '_' || c == '-';
        out.push_back(ok ? c : '_');
    }
    return out.empty() ? "_" : out;
}

std::filesystem::path solutions_path(const std::filesystem::path& store_dir, const std::string& model) {
    return store_dir / ("solutions_" + sanitize_model_for_filename(model) + ".json");
}

std::filesystem::path submissions_path(const std::filesystem::path& store_dir, const std::string& model) {
    return store_dir / ("submissions_" + sanitize_model_for_filename(model) + ".json");
}

std::filesystem::path checkpoint_path(const std::filesystem::path& store_dir, PassKind kind,
                                      const std::string& model) {
    return store_dir /
           (std::string(to_string(kind)) + "_" + sanitize_model_for_filename(model) + ".checkpoint.json");
}

}  // namespace cg
