#pragma once

#include <chrono>
#include <csignal>
#include <cstring>
#include <string>

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include "regexmend/errors.hpp"

namespace regexmend {

struct CommandResult {
    int exit_code = -1;
    bool timed_out = false;
    std::string output;
};

// Runs `command` through /bin/sh, feeding `input` on stdin and collecting
// stdout until exit or deadline; the child is killed on timeout.
inline CommandResult run_command(const std::string& command, const std::string& input,
                                 std::chrono::milliseconds timeout) {
    // A child may exit without draining stdin; the resulting EPIPE must not
    // raise SIGPIPE against this process.
    static const bool sigpipe_ignored = [] {
        signal(SIGPIPE, SIG_IGN);
        return true;
    }();
    (void)sigpipe_ignored;

    int in_pipe[2], out_pipe[2];
    if (pipe(in_pipe) != 0 || pipe(out_pipe) != 0) throw ToolError("pipe() failed");

    pid_t pid = fork();
    if (pid < 0) throw ToolError("fork() failed");
    if (pid == 0) {
        dup2(in_pipe[0], STDIN_FILENO);
        dup2(out_pipe[1], STDOUT_FILENO);
        close(in_pipe[0]);
        close(in_pipe[1]);
        close(out_pipe[0]);
        close(out_pipe[1]);
        execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
        _exit(127);
    }
    close(in_pipe[0]);
    close(out_pipe[1]);

    // Writes can block once the pipe buffer fills; poll both ends.
    fcntl(in_pipe[1], F_SETFL, O_NONBLOCK);
    fcntl(out_pipe[0], F_SETFL, O_NONBLOCK);

    CommandResult result;
    std::size_t written = 0;
    bool stdin_open = true, stdout_open = true;
    auto deadline = std::chrono::steady_clock::now() + timeout;

    while (stdout_open || stdin_open) {
        auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
            deadline - std::chrono::steady_clock::now());
        if (remaining.count() <= 0) {
            result.timed_out = true;
            break;
        }
        pollfd fds[2];
        nfds_t n = 0;
        if (stdout_open) fds[n++] = {out_pipe[0], POLLIN, 0};
        if (stdin_open) fds[n++] = {in_pipe[1], POLLOUT, 0};
        int rc = poll(fds, n, static_cast<int>(std::min<long long>(remaining.count(), 200)));
        if (rc < 0 && errno != EINTR) break;
        for (nfds_t i = 0; i < n; ++i) {
            if (fds[i].fd == out_pipe[0] && (fds[i].revents & (POLLIN | POLLHUP))) {
                char buf[4096];
                ssize_t got = read(out_pipe[0], buf, sizeof buf);
                if (got > 0)
                    result.output.append(buf, static_cast<std::size_t>(got));
                else if (got == 0 || (got < 0 && errno != EAGAIN && errno != EINTR))
                    stdout_open = false;
            }
            if (fds[i].fd == in_pipe[1] && (fds[i].revents & (POLLOUT | POLLERR | POLLHUP))) {
                if (written >= input.size() || (fds[i].revents & (POLLERR | POLLHUP))) {
                    close(in_pipe[1]);
                    stdin_open = false;
                } else {
                    ssize_t put = write(in_pipe[1], input.data() + written, input.size() - written);
                    if (put > 0) written += static_cast<std::size_t>(put);
                    if (written >= input.size() || (put < 0 && errno == EPIPE)) {
                        close(in_pipe[1]);
                        stdin_open = false;
                    }
                }
            }
        }
    }
    if (stdin_open) close(in_pipe[1]);
    close(out_pipe[0]);

    if (result.timed_out) {
        kill(pid, SIGKILL);
        waitpid(pid, nullptr, 0);
        return result;
    }
    int status = 0;
    waitpid(pid, &status, 0);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace regexmend
