#include "codegauntlet/atomic_file.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <atomic>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include "codegauntlet/error.hpp"
#include "codegauntlet/failpoint.hpp"

namespace cg {

namespace fs = std::filesystem;

namespace {

std::atomic<unsigned> g_temp_seq{0};

[[noreturn]] void throw_errno(const std::string& op, const fs::path& p, int err) {
    throw StoreError(op + " failed for '" + p.string() + "': " + std::strerror(err));
}

// RAII fd that unlinks the temp file unless the rename succeeded.
class TempFile {
  public:
    TempFile(fs::path path, int fd) : path_(std::move(path)), fd_(fd) {}
    ~TempFile() {
        if (fd_ >= 0) ::close(fd_);
        if (!committed_) {
            // Best effort; a leftover temp is inert because readers skip it.
            std::error_code ec;
            fs::remove(path_, ec);
        }
    }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;

    int fd() const { return fd_; }
    const fs::path& path() const { return path_; }
    void close_fd() {
        if (fd_ >= 0) {
            ::close(fd_);
            fd_ = -1;
        }
    }
    void commit() { committed_ = true; }

  private:
    fs::path path_;
    int fd_;
    bool committed_ = false;
};

void fsync_parent_dir(const fs::path& path) {
    fs::path dir = path.parent_path();
    if (dir.empty()) dir = ".";
    int dfd = ::open(dir.c_str(), O_RDONLY | O_DIRECTORY);
    if (dfd < 0) return;  // directory sync is best effort on exotic filesystems
    ::fsync(dfd);
    ::close(dfd);
}

}  // namespace

bool is_temp_artifact(const fs::path& p) {
    return p.filename().string().find(kTempMarker) != std::string::npos;
}

void atomic_write(const fs::path& path, std::string_view payload) {
    const fs::path tmp = path.string() + std::string(kTempMarker) + std::to_string(::getpid()) +
                         "." + std::to_string(g_temp_seq.fetch_add(1));

    failpoint::fire("atomic_write.open");
    int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_EXCL, 0644);
    if (fd < 0) throw_errno("open", tmp, errno);
    TempFile tf(tmp, fd);

    failpoint::fire("atomic_write.write");
    const char* data = payload.data();
    size_t remaining = payload.size();
    while (remaining > 0) {
        ssize_t n = ::write(tf.fd(), data, remaining);
        if (n < 0) {
            if (errno == EINTR) continue;
            throw_errno("write", tmp, errno);
        }
        data += n;
        remaining -= static_cast<size_t>(n);
    }

    // flush stage is the write(2) path draining userspace buffers; nothing
    // is buffered here, but the failpoint keeps the stage observable.
    failpoint::fire("atomic_write.flush");

    failpoint::fire("atomic_write.sync");
    if (::fsync(tf.fd()) < 0) throw_errno("fsync", tmp, errno);
    tf.close_fd();

    failpoint::fire("atomic_write.rename");
    if (::rename(tmp.c_str(), path.c_str()) < 0) throw_errno("rename", path, errno);
    tf.commit();

    fsync_parent_dir(path);
}

bool atomic_write_if_changed(const fs::path& path, std::string_view payload) {
    if (auto existing = read_file(path); existing && *existing == payload) return false;
    atomic_write(path, payload);
    return true;
}

std::optional<std::string> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.is_open()) {
        if (!fs::exists(path)) return std::nullopt;
        throw StoreError("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream out;
    out << in.rdbuf();
    if (in.bad()) throw StoreError("read failed for '" + path.string() + "'");
    return out.str();
}

}  // namespace cg
