#include "codegauntlet/checkpoint.hpp"

#include "codegauntlet/atomic_file.hpp"
#include "codegauntlet/error.hpp"
#include "json.hpp"

namespace cg {

using nlohmann::json;

namespace {

PassKind pass_kind_from_string(const std::string& s, const std::string& ctx) {
    if (s == "generation") return PassKind::Generation;
    if (s == "submission") return PassKind::Submission;
    throw StoreError(ctx + ": unknown pass_kind \"" + s + "\"");
}

[[noreturn]] void corrupt(const std::filesystem::path& path, const std::string& why) {
    throw StoreError("corrupt checkpoint '" + path.string() + "': " + why +
                     "; delete the file to restart this pass from scratch, or repair it by hand");
}

}  // namespace

std::optional<Checkpoint> read_checkpoint(const std::filesystem::path& store_dir, PassKind kind,
                                          const std::string& model) {
    const auto path = checkpoint_path(store_dir, kind, model);
    auto text = read_file(path);
    if (!text) return std::nullopt;

    json doc;
    try {
        doc = json::parse(*text);
    } catch (const json::parse_error& e) {
        corrupt(path, std::string("malformed JSON: ") + e.what());
    }
    try {
        Checkpoint cp;
        cp.pass_kind = pass_kind_from_string(doc.at("pass_kind").get<std::string>(), path.string());
        cp.model = doc.at("model").get<std::string>();
        cp.last_processed_id = doc.at("last_processed_id").get<std::string>();
        cp.processed_count = doc.at("processed_count").get<std::uint64_t>();
        if (cp.pass_kind != kind || cp.model != model)
            corrupt(path, "pass_kind/model do not match the file name");
        if (cp.last_processed_id == kCheckpointNone && cp.processed_count != 0)
            corrupt(path, "processed_count must be 0 when nothing was processed");
        return cp;
    } catch (const json::exception& e) {
        corrupt(path, std::string("missing or mistyped field: ") + e.what());
    }
}

void write_checkpoint(const std::filesystem::path& store_dir, const Checkpoint& cp) {
    json doc{{"pass_kind", to_string(cp.pass_kind)},
             {"model", cp.model},
             {"last_processed_id", cp.last_processed_id},
             {"processed_count", cp.processed_count}};
    atomic_write(checkpoint_path(store_dir, cp.pass_kind, cp.model), doc.dump(2) + "\n");
}

std::size_t resume_index(const ProblemCorpus& corpus, const std::optional<Checkpoint>& cp) {
    if (!cp || cp->last_processed_id == kCheckpointNone) return 0;
    auto idx = corpus.index_of(cp->last_processed_id);
    if (!idx)
        throw StoreError("checkpoint for model \"" + cp->model + "\" names problem \"" +
                         cp->last_processed_id +
                         "\" which is not in the corpus; delete or repair the checkpoint file");
    if (cp->processed_count != *idx + 1)
        throw StoreError("checkpoint for model \"" + cp->model + "\" has processed_count " +
                         std::to_string(cp->processed_count) + " but \"" + cp->last_processed_id +
                         "\" is problem #" + std::to_string(*idx + 1) +
                         " in canonical order; delete or repair the checkpoint file");
    return *idx + 1;
}

}  // namespace cg
