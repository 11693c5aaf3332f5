#include "jtgen/support/subprocess.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>

#include "jtgen/support/errors.hpp"
#include "jtgen/support/strings.hpp"

namespace jtgen::subprocess {

namespace {

void drain(int fd, std::string& sink) {
    char buf[4096];
    for (;;) {
        ssize_t n = ::read(fd, buf, sizeof buf);
        if (n > 0) {
            sink.append(buf, static_cast<std::size_t>(n));
        } else {
            break;
        }
    }
}

}  // namespace

Result run(const Command& cmd) {
    int out_pipe[2];
    int err_pipe[2];
    if (::pipe(out_pipe) != 0 || ::pipe(err_pipe) != 0) {
        throw Error("pipe() failed: " + std::string(std::strerror(errno)));
    }

    pid_t pid = ::fork();
    if (pid < 0) {
        throw Error("fork() failed: " + std::string(std::strerror(errno)));
    }

    if (pid == 0) {
        // child
        ::dup2(out_pipe[1], STDOUT_FILENO);
        ::dup2(err_pipe[1], STDERR_FILENO);
        ::close(out_pipe[0]);
        ::close(out_pipe[1]);
        ::close(err_pipe[0]);
        ::close(err_pipe[1]);

        if (!cmd.working_dir.empty()) {
            if (::chdir(cmd.working_dir.c_str()) != 0) _exit(127);
        }

        std::vector<char*> argv;
        argv.push_back(const_cast<char*>(cmd.program.c_str()));
        for (const auto& a : cmd.args) argv.push_back(const_cast<char*>(a.c_str()));
        argv.push_back(nullptr);
        ::execvp(cmd.program.c_str(), argv.data());
        _exit(127);
    }

    ::close(out_pipe[1]);
    ::close(err_pipe[1]);

    Result result;
    const auto deadline = std::chrono::steady_clock::now() + cmd.timeout;
    const bool has_timeout = cmd.timeout.count() > 0;

    struct pollfd fds[2] = {{out_pipe[0], POLLIN, 0}, {err_pipe[0], POLLIN, 0}};
    bool open_fd[2] = {true, true};
    std::string* sinks[2] = {&result.stdout_text, &result.stderr_text};

    while (open_fd[0] || open_fd[1]) {
        int wait_ms = -1;
        if (has_timeout) {
            auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
                            deadline - std::chrono::steady_clock::now())
                            .count();
            if (left <= 0) {
                ::kill(pid, SIGKILL);
                result.timed_out = true;
                break;
            }
            wait_ms = static_cast<int>(left);
        }
        int rc = ::poll(fds, 2, wait_ms);
        if (rc < 0) {
            if (errno == EINTR) continue;
            break;
        }
        if (rc == 0) continue;  // re-check deadline
        for (int i = 0; i < 2; ++i) {
            if (!open_fd[i]) continue;
            if (fds[i].revents & POLLIN) {
                char buf[4096];
                ssize_t n = ::read(fds[i].fd, buf, sizeof buf);
                if (n > 0) {
                    sinks[i]->append(buf, static_cast<std::size_t>(n));
                } else {
                    open_fd[i] = false;
                    fds[i].fd = -1;
                }
            } else if (fds[i].revents & (POLLHUP | POLLERR)) {
                drain(fds[i].fd, *sinks[i]);
                open_fd[i] = false;
                fds[i].fd = -1;
            }
        }
    }

    if (result.timed_out) {
        drain(out_pipe[0], result.stdout_text);
        drain(err_pipe[0], result.stderr_text);
    }
    ::close(out_pipe[0]);
    ::close(err_pipe[0]);

    int status = 0;
    ::waitpid(pid, &status, 0);
    if (result.timed_out) {
        result.exit_code = -1;
    } else if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    } else if (WIFSIGNALED(status)) {
        result.exit_code = 128 + WTERMSIG(status);
    }
    return result;
}

std::string find_on_path(const std::string& name) {
    if (name.find('/') != std::string::npos) {
        return std::filesystem::exists(name) ? name : std::string();
    }
    const char* path_env = std::getenv("PATH");
    if (!path_env) return {};
    for (const auto& dir : strings::split(path_env, ':')) {
        if (dir.empty()) continue;
        std::filesystem::path candidate = std::filesystem::path(dir) / name;
        std::error_code ec;
        if (std::filesystem::exists(candidate, ec) && ::access(candidate.c_str(), X_OK) == 0) {
            return candidate.string();
        }
    }
    return {};
}

}  // namespace jtgen::subprocess
