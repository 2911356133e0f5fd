#include "codegauntlet/sandbox.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstring>
#include <fstream>

#include "codegauntlet/error.hpp"

namespace cg {

namespace {

// Captured output is capped; past the cap we keep draining but discard so
// an output-spamming program still hits its wall limit instead of us OOMing.
constexpr std::size_t kMaxCapture = 8u << 20;
constexpr int kPollSliceMs = 5;

double now_mono() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

void set_nonblocking(int fd) { ::fcntl(fd, F_SETFL, ::fcntl(fd, F_GETFL, 0) | O_NONBLOCK); }

void close_fd(int& fd) {
    if (fd >= 0) {
        ::close(fd);
        fd = -1;
    }
}

// Current resident set of a live process, MiB. Returns nullopt off-Linux or
// once the process is gone.
std::optional<double> current_rss_mib(pid_t pid) {
#ifdef __linux__
    std::ifstream statm("/proc/" + std::to_string(pid) + "/statm");
    long size_pages = 0, rss_pages = 0;
    if (!(statm >> size_pages >> rss_pages)) return std::nullopt;
    const long page = ::sysconf(_SC_PAGESIZE);
    return rss_pages * static_cast<double>(page) / (1024.0 * 1024.0);
#else
    (void)pid;
    return std::nullopt;
#endif
}

}  // namespace

ExecutionOutcome run_sandboxed(const std::vector<std::string>& argv, const std::string& stdin_data,
                               const SandboxLimits& limits) {
    if (argv.empty()) throw ConfigError("sandbox: empty command");

    // Writing to a pipe the child already closed must not kill this process.
    static const bool sigpipe_ignored = [] {
        ::signal(SIGPIPE, SIG_IGN);
        return true;
    }();
    (void)sigpipe_ignored;

    int in_pipe[2], out_pipe[2], err_pipe[2], exec_pipe[2];
    if (::pipe(in_pipe) < 0 || ::pipe(out_pipe) < 0 || ::pipe(err_pipe) < 0 ||
        ::pipe2(exec_pipe, O_CLOEXEC) < 0)
        throw ConfigError("sandbox: pipe creation failed");

    const pid_t pid = ::fork();
    if (pid < 0) throw ConfigError("sandbox: fork failed");

    if (pid == 0) {
        ::setpgid(0, 0);
        ::dup2(in_pipe[0], STDIN_FILENO);
        ::dup2(out_pipe[1], STDOUT_FILENO);
        ::dup2(err_pipe[1], STDERR_FILENO);
        for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1], err_pipe[0], err_pipe[1]})
            ::close(fd);

        if (limits.cpu_time_limit_s) {
            const rlim_t soft = static_cast<rlim_t>(std::ceil(*limits.cpu_time_limit_s));
            rlimit rl{soft, soft + 1};
            ::setrlimit(RLIMIT_CPU, &rl);
        }

        std::vector<char*> cargv;
        cargv.reserve(argv.size() + 1);
        for (const auto& a : argv) cargv.push_back(const_cast<char*>(a.c_str()));
        cargv.push_back(nullptr);
        ::execvp(cargv[0], cargv.data());

        const int err = errno;
        [[maybe_unused]] ssize_t n = ::write(exec_pipe[1], &err, sizeof(err));
        ::_exit(127);
    }

    ::setpgid(pid, pid);  // both sides set it to close the race
    close_fd(in_pipe[0]);
    close_fd(out_pipe[1]);
    close_fd(err_pipe[1]);
    close_fd(exec_pipe[1]);

    // Blocks until exec succeeds (pipe closes, 0 bytes) or the child reports
    // the exec errno. The child emits nothing before exec, so no deadlock.
    int exec_errno = 0;
    if (::read(exec_pipe[0], &exec_errno, sizeof(exec_errno)) == sizeof(exec_errno)) {
        close_fd(exec_pipe[0]);
        close_fd(in_pipe[1]);
        close_fd(out_pipe[0]);
        close_fd(err_pipe[0]);
        int status = 0;
        ::waitpid(pid, &status, 0);
        throw ConfigError("sandbox: cannot execute '" + argv[0] + "': " + std::strerror(exec_errno));
    }
    close_fd(exec_pipe[0]);

    set_nonblocking(in_pipe[1]);
    set_nonblocking(out_pipe[0]);
    set_nonblocking(err_pipe[0]);

    ExecutionOutcome outcome;
    const double t0 = now_mono();
    std::size_t stdin_off = 0;
    bool killed = false;

    auto kill_group = [&] {
        if (killed) return;
        killed = true;
        ::kill(-pid, SIGKILL);
        ::kill(pid, SIGKILL);
    };

    int in_fd = in_pipe[1], out_fd = out_pipe[0], err_fd = err_pipe[0];
    if (stdin_data.empty()) close_fd(in_fd);

    while (out_fd >= 0 || err_fd >= 0) {
        pollfd fds[3];
        nfds_t n = 0;
        if (in_fd >= 0) fds[n++] = {in_fd, POLLOUT, 0};
        if (out_fd >= 0) fds[n++] = {out_fd, POLLIN, 0};
        if (err_fd >= 0) fds[n++] = {err_fd, POLLIN, 0};
        ::poll(fds, n, kPollSliceMs);

        for (nfds_t i = 0; i < n; ++i) {
            const int fd = fds[i].fd;
            if (fd == in_fd && (fds[i].revents & (POLLOUT | POLLERR | POLLHUP))) {
                if (fds[i].revents & (POLLERR | POLLHUP)) {
                    close_fd(in_fd);  // child closed stdin; remaining input is moot
                    continue;
                }
                const ssize_t w =
                    ::write(in_fd, stdin_data.data() + stdin_off, stdin_data.size() - stdin_off);
                if (w > 0) stdin_off += static_cast<std::size_t>(w);
                else if (w < 0 && errno != EAGAIN && errno != EINTR) close_fd(in_fd);
                if (stdin_off == stdin_data.size()) close_fd(in_fd);
            } else if ((fd == out_fd || fd == err_fd) && (fds[i].revents & (POLLIN | POLLHUP))) {
                char buf[65536];
                const ssize_t r = ::read(fd, buf, sizeof(buf));
                if (r > 0) {
                    std::string& sink = (fd == out_fd) ? outcome.stdout_text : outcome.stderr_text;
                    if (sink.size() < kMaxCapture)
                        sink.append(buf, std::min<std::size_t>(r, kMaxCapture - sink.size()));
                } else if (r == 0 || (r < 0 && errno != EAGAIN && errno != EINTR)) {
                    if (fd == out_fd) close_fd(out_fd);
                    else close_fd(err_fd);
                }
            }
        }

        const double elapsed = now_mono() - t0;
        if (!killed && elapsed > limits.wall_clock_limit_s) {
            outcome.timed_out = true;
            kill_group();
        }
        if (!killed && limits.memory_limit_mib) {
            if (auto rss = current_rss_mib(pid); rss && *rss > *limits.memory_limit_mib) {
                outcome.memory_exceeded = true;
                if (!outcome.peak_memory_mib || *rss > *outcome.peak_memory_mib)
                    outcome.peak_memory_mib = *rss;
                kill_group();
            }
        }
    }
    close_fd(in_fd);

    int status = 0;
    rusage ru{};
    ::wait4(pid, &status, 0, &ru);
    outcome.elapsed_s = now_mono() - t0;

#ifdef __linux__
    const double maxrss_mib = ru.ru_maxrss / 1024.0;  // ru_maxrss is KiB on Linux
    if (!outcome.peak_memory_mib || maxrss_mib > *outcome.peak_memory_mib)
        outcome.peak_memory_mib = maxrss_mib;
#endif

    if (WIFEXITED(status)) {
        outcome.exit_code = WEXITSTATUS(status);
    } else if (WIFSIGNALED(status)) {
        outcome.term_signal = WTERMSIG(status);
        if (outcome.term_signal == SIGXCPU) outcome.timed_out = true;
    }
    if (limits.cpu_time_limit_s) {
        const double cpu_used = ru.ru_utime.tv_sec + ru.ru_utime.tv_usec / 1e6 + ru.ru_stime.tv_sec +
                                ru.ru_stime.tv_usec / 1e6;
        if (cpu_used >= *limits.cpu_time_limit_s) outcome.timed_out = true;
    }
    return outcome;
}

}  // namespace cg
