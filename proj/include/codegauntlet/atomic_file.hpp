#ifndef CODEGAUNTLET_ATOMIC_FILE_HPP
#define CODEGAUNTLET_ATOMIC_FILE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace cg {

// Marker embedded in temporary sibling names. A crash can leave such files
// behind; every reader in the pipeline skips names carrying it.
inline constexpr std::string_view kTempMarker = ".tmp.";

bool is_temp_artifact(const std::filesystem::path& p);

// Writes `payload` to `path` so that readers observe either the previous
// content or the full new content, never anything partial:
// write to a temporary sibling, flush, fsync, rename over the destination,
// fsync the directory. Throws StoreError on failure; a failure leaves any
// pre-existing file untouched (temp residue may remain and is inert).
void atomic_write(const std::filesystem::path& path, std::string_view payload);

// atomic_write, skipped when the destination already holds exactly
// `payload`. Returns true when a write happened.
bool atomic_write_if_changed(const std::filesystem::path& path, std::string_view payload);

// Whole-file read. Returns nullopt if the file does not exist; throws
// StoreError on other I/O failures.
std::optional<std::string> read_file(const std::filesystem::path& path);

}  // namespace cg

#endif
