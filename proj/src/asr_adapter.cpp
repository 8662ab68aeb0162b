// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#include "ttseval/asr_adapter.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstring>
#include <fstream>
#include <sstream>

#include <httplib.h>

#include "ttseval/errors.hpp"

namespace ttseval {

namespace {

std::string shell_quote(const std::string& s) {
  std::string quoted = "'";
  for (char c : s) {
    if (c == '\'')
      quoted += "'\\''";
    else
      quoted.push_back(c);
  }
  quoted.push_back('\'');
  return quoted;
}

std::string expand_template(const std::string& command, const std::string& path) {
  const std::string quoted = shell_quote(path);
  std::string expanded;
  std::size_t pos = 0;
  bool replaced = false;
  for (;;) {
    const std::size_t hit = command.find("{audio}", pos);
    if (hit == std::string::npos) {
      expanded += command.substr(pos);
      break;
    }
    expanded += command.substr(pos, hit - pos);
    expanded += quoted;
    pos = hit + 7;
    replaced = true;
  }
  if (!replaced) expanded += " " + quoted;
  return expanded;
}

std::string strip_trailing_newline(std::string s) {
  if (!s.empty() && s.back() == '\n') s.pop_back();
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

std::string via_command(const AsrAdapter& adapter, const std::string& audio_path) {
  const std::string command = expand_template(adapter.command, audio_path);
  const CommandResult result = run_command(command, adapter.timeout_seconds);
  if (result.timed_out)
    throw AdapterTimeout("ASR command timed out after " +
                         std::to_string(adapter.timeout_seconds) + " s: " + command);
  if (result.exit_code != 0)
    throw AdapterError("ASR command exited with status " +
                       std::to_string(result.exit_code) + ": " + result.err);
  return strip_trailing_newline(result.out);
}

std::string via_endpoint(const AsrAdapter& adapter, const std::string& audio_path) {
  // http://host[:port][/path]
  const std::string& url = adapter.endpoint;
  const std::string scheme = "http://";
  if (url.compare(0, scheme.size(), scheme) != 0)
    throw ValidationError("ASR endpoint must start with http:// : " + url);
  const std::size_t host_start = scheme.size();
  const std::size_t path_start = url.find('/', host_start);
  const std::string host_port = path_start == std::string::npos
                                    ? url.substr(host_start)
                                    : url.substr(host_start, path_start - host_start);
  const std::string path =
      path_start == std::string::npos ? "/" : url.substr(path_start);

  std::ifstream in(audio_path, std::ios::binary);
  if (!in) throw FormatError("cannot open audio file: " + audio_path);
  std::ostringstream body;
  body << in.rdbuf();

  httplib::Client client(("http://" + host_port).c_str());
  const int seconds = static_cast<int>(adapter.timeout_seconds);
  const int micros = static_cast<int>((adapter.timeout_seconds - seconds) * 1e6);
  client.set_connection_timeout(seconds, micros);
  client.set_read_timeout(seconds, micros);
  client.set_write_timeout(seconds, micros);

  const auto res = client.Post(path.c_str(), body.str(), "application/octet-stream");
  if (!res) {
    if (res.error() == httplib::Error::Read || res.error() == httplib::Error::ConnectionTimeout)
      throw AdapterTimeout("ASR endpoint timed out: " + url);
    throw AdapterError("ASR endpoint unreachable: " + url + " (" +
                       httplib::to_string(res.error()) + ")");
  }
  if (res->status < 200 || res->status >= 300)
    throw AdapterError("ASR endpoint returned status " +
                       std::to_string(res->status) + ": " + res->body);
  return strip_trailing_newline(res->body);
}

}  // namespace

CommandResult run_command(const std::string& command, double timeout_seconds) {
  int out_pipe[2], err_pipe[2];
  if (pipe(out_pipe) != 0 || pipe(err_pipe) != 0)
    throw AdapterError("pipe() failed: " + std::string(std::strerror(errno)));

  const pid_t pid = fork();
  if (pid < 0) throw AdapterError("fork() failed: " + std::string(std::strerror(errno)));
  if (pid == 0) {
    dup2(out_pipe[1], STDOUT_FILENO);
    dup2(err_pipe[1], STDERR_FILENO);
    close(out_pipe[0]);
    close(out_pipe[1]);
    close(err_pipe[0]);
    close(err_pipe[1]);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }

  close(out_pipe[1]);
  close(err_pipe[1]);

  CommandResult result;
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration<double>(timeout_seconds);
  struct pollfd fds[2] = {{out_pipe[0], POLLIN, 0}, {err_pipe[0], POLLIN, 0}};
  bool open[2] = {true, true};
  char buf[4096];
  while (open[0] || open[1]) {
    const auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (remaining.count() <= 0) {
      kill(pid, SIGKILL);
      waitpid(pid, nullptr, 0);
      close(out_pipe[0]);
      close(err_pipe[0]);
      result.timed_out = true;
      return result;
    }
    fds[0].events = open[0] ? POLLIN : 0;
    fds[1].events = open[1] ? POLLIN : 0;
    const int n = poll(fds, 2, static_cast<int>(std::min<long long>(
                                   remaining.count(), 1000)));
    if (n < 0 && errno != EINTR) break;
    for (int i = 0; i < 2; ++i) {
      if (!open[i] || !(fds[i].revents & (POLLIN | POLLHUP))) continue;
      const ssize_t got = read(fds[i].fd, buf, sizeof(buf));
      if (got > 0)
        (i == 0 ? result.out : result.err).append(buf, static_cast<std::size_t>(got));
      else if (got == 0 || (got < 0 && errno != EINTR))
        open[i] = false;
    }
  }
  close(out_pipe[0]);
  close(err_pipe[0]);

  // Streams are closed; wait for exit, still bounded by the deadline.
  int status = 0;
  for (;;) {
    const pid_t done = waitpid(pid, &status, WNOHANG);
    if (done == pid) break;
    if (done < 0 && errno != EINTR) break;
    if (std::chrono::steady_clock::now() >= deadline) {
      kill(pid, SIGKILL);
      waitpid(pid, nullptr, 0);
      result.timed_out = true;
      return result;
    }
    usleep(2000);
  }
  if (WIFEXITED(status))
    result.exit_code = WEXITSTATUS(status);
  else if (WIFSIGNALED(status))
    result.exit_code = 128 + WTERMSIG(status);
  return result;
}

std::string transcribe_external(const AsrAdapter& adapter,
                                const std::string& audio_path) {
  if (!adapter.command.empty()) return via_command(adapter, audio_path);
  if (!adapter.endpoint.empty()) return via_endpoint(adapter, audio_path);
  throw ValidationError("ASR adapter: neither command nor endpoint configured");
}

}  // namespace ttseval
