// Copyright 2026 The litscan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// NDJSON classifier subprocess client. The child is driven full-duplex
// through pipes with a poll loop so large batches cannot deadlock on pipe
// buffers, and a single deadline covers the whole batch.

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <optional>
#include <unordered_map>

#include <json.hpp>

#include "litscan/emotion.hpp"
#include "litscan/errors.hpp"

namespace litscan {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Pipe {
  int read_fd = -1;
  int write_fd = -1;
};

Pipe make_pipe() {
  int fds[2];
  if (pipe(fds) != 0) {
    throw AdapterError(std::string("adapter spawn failed: pipe: ") +
                       std::strerror(errno));
  }
  return {fds[0], fds[1]};
}

void close_fd(int& fd) {
  if (fd >= 0) {
    ::close(fd);
    fd = -1;
  }
}

void set_nonblocking(int fd) {
  const int flags = fcntl(fd, F_GETFL, 0);
  fcntl(fd, F_SETFL, flags | O_NONBLOCK);
}

class ChildProcess {
 public:
  ChildProcess(const std::string& command) {
    Pipe to_child = make_pipe();
    Pipe from_child = make_pipe();
    pid_ = fork();
    if (pid_ < 0) {
      throw AdapterError(std::string("adapter spawn failed: fork: ") +
                         std::strerror(errno));
    }
    if (pid_ == 0) {
      dup2(to_child.read_fd, STDIN_FILENO);
      dup2(from_child.write_fd, STDOUT_FILENO);
      ::close(to_child.read_fd);
      ::close(to_child.write_fd);
      ::close(from_child.read_fd);
      ::close(from_child.write_fd);
      execl("/bin/sh", "sh", "-c", command.c_str(), (char*)nullptr);
      _exit(127);
    }
    close_fd(to_child.read_fd);
    close_fd(from_child.write_fd);
    stdin_fd_ = to_child.write_fd;
    stdout_fd_ = from_child.read_fd;
    set_nonblocking(stdin_fd_);
    set_nonblocking(stdout_fd_);
    // A child that stops reading must not kill us with SIGPIPE.
    signal(SIGPIPE, SIG_IGN);
  }

  ~ChildProcess() {
    close_fd(stdin_fd_);
    close_fd(stdout_fd_);
    if (pid_ > 0 && !reaped_) {
      kill(pid_, SIGKILL);
      waitpid(pid_, nullptr, 0);
    }
  }

  int stdin_fd() const { return stdin_fd_; }
  int stdout_fd() const { return stdout_fd_; }
  void close_stdin() { close_fd(stdin_fd_); }
  void close_stdout() { close_fd(stdout_fd_); }

  // Waits for the child and returns its exit status (or -signal).
  int wait() {
    if (reaped_) return status_;
    int status = 0;
    waitpid(pid_, &status, 0);
    reaped_ = true;
    if (WIFEXITED(status)) {
      status_ = WEXITSTATUS(status);
    } else if (WIFSIGNALED(status)) {
      status_ = -WTERMSIG(status);
    }
    return status_;
  }

  void kill_now() {
    if (pid_ > 0 && !reaped_) kill(pid_, SIGKILL);
  }

 private:
  pid_t pid_ = -1;
  int stdin_fd_ = -1;
  int stdout_fd_ = -1;
  bool reaped_ = false;
  int status_ = 0;
};

std::string encode_request(std::size_t id, const std::string& text) {
  json req;
  req["id"] = id;
  req["text"] = text;
  return req.dump() + "\n";
}

struct ParsedResponse {
  std::size_t id;
  EmotionResult result;
};

ParsedResponse parse_response(const std::string& line, std::size_t line_no,
                              const AdapterConfig& config) {
  json doc;
  try {
    doc = json::parse(line);
  } catch (const json::parse_error& e) {
    throw AdapterError("malformed adapter response line " +
                       std::to_string(line_no) + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("id") ||
      !doc["id"].is_number_integer()) {
    throw AdapterError("malformed adapter response line " +
                       std::to_string(line_no) + ": missing integer \"id\"");
  }
  if (!doc.contains("label") || !doc["label"].is_string()) {
    throw AdapterError("malformed adapter response line " +
                       std::to_string(line_no) + ": missing \"label\"");
  }
  ParsedResponse out;
  out.id = doc["id"].get<std::size_t>();
  out.result.source = EmotionSource::kAdapter;
  out.result.label = doc["label"].get<std::string>();
  if (std::find(config.labels.begin(), config.labels.end(),
                out.result.label) == config.labels.end()) {
    throw AdapterError("adapter returned unknown label \"" +
                       out.result.label + "\" for id " +
                       std::to_string(out.id));
  }
  if (doc.contains("scores") && !doc["scores"].is_null()) {
    if (!doc["scores"].is_object()) {
      throw AdapterError("malformed adapter response line " +
                         std::to_string(line_no) +
                         ": \"scores\" must be an object");
    }
    for (const auto& [label, value] : doc["scores"].items()) {
      if (std::find(config.labels.begin(), config.labels.end(), label) ==
          config.labels.end()) {
        throw AdapterError("adapter returned unknown label \"" + label +
                           "\" in scores for id " + std::to_string(out.id));
      }
      if (!value.is_number() || value.get<double>() < 0.0) {
        throw AdapterError("malformed adapter response line " +
                           std::to_string(line_no) +
                           ": scores must be non-negative numbers");
      }
      out.result.scores[label] = value.get<double>();
    }
    // The reported label must be what the scores say it is.
    auto rank = [&](const std::string& label) {
      const auto it = std::find(config.priority.begin(),
                                config.priority.end(), label);
      return static_cast<std::size_t>(it - config.priority.begin());
    };
    std::string argmax;
    double best = -1.0;
    for (const auto& [label, value] : out.result.scores) {
      if (value > best ||
          (value == best && rank(label) < rank(argmax))) {
        argmax = label;
        best = value;
      }
    }
    if (argmax != out.result.label) {
      throw AdapterError("adapter response for id " + std::to_string(out.id) +
                         ": label \"" + out.result.label +
                         "\" is not the argmax of scores");
    }
  } else {
    out.result.scores[out.result.label] = 1.0;
  }
  return out;
}

}  // namespace

std::vector<EmotionResult> classify_via_adapter(
    const std::vector<std::pair<std::size_t, std::string>>& batch,
    const AdapterConfig& config) {
  if (config.command.empty()) {
    throw AdapterError("adapter command is empty");
  }
  std::vector<EmotionResult> results(batch.size());
  if (batch.empty()) return results;

  std::unordered_map<std::size_t, std::size_t> position;
  std::string outgoing;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    if (!position.emplace(batch[i].first, i).second) {
      throw AdapterError("duplicate id " + std::to_string(batch[i].first) +
                         " in adapter batch");
    }
    outgoing += encode_request(batch[i].first, batch[i].second);
  }

  ChildProcess child(config.command);
  const auto deadline = Clock::now() + config.timeout;

  std::size_t sent = 0;
  std::string incoming;
  std::size_t line_no = 0;
  std::vector<bool> answered(batch.size(), false);
  std::size_t answered_count = 0;

  auto handle_line = [&](const std::string& line) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) return;
    ParsedResponse parsed = parse_response(line, line_no, config);
    auto it = position.find(parsed.id);
    if (it == position.end()) {
      throw AdapterError("adapter returned unexpected id " +
                         std::to_string(parsed.id));
    }
    if (answered[it->second]) {
      throw AdapterError("adapter returned duplicate response for id " +
                         std::to_string(parsed.id));
    }
    answered[it->second] = true;
    ++answered_count;
    results[it->second] = std::move(parsed.result);
  };

  bool stdout_open = true;
  while (stdout_open && answered_count < batch.size()) {
    const auto now = Clock::now();
    if (now >= deadline) {
      child.kill_now();
      throw AdapterError(
          "adapter timed out after " +
          std::to_string(config.timeout.count()) + " ms (" +
          std::to_string(batch.size() - answered_count) +
          " responses outstanding)");
    }
    const int wait_ms = static_cast<int>(
        std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now)
            .count());

    pollfd fds[2];
    nfds_t nfds = 0;
    int stdin_slot = -1;
    int stdout_slot = -1;
    if (sent < outgoing.size() && child.stdin_fd() >= 0) {
      stdin_slot = static_cast<int>(nfds);
      fds[nfds++] = {child.stdin_fd(), POLLOUT, 0};
    }
    if (child.stdout_fd() >= 0) {
      stdout_slot = static_cast<int>(nfds);
      fds[nfds++] = {child.stdout_fd(), POLLIN, 0};
    }
    const int ready = poll(fds, nfds, std::max(wait_ms, 1));
    if (ready < 0) {
      if (errno == EINTR) continue;
      throw AdapterError(std::string("adapter poll failed: ") +
                         std::strerror(errno));
    }
    if (ready == 0) continue;  // loop re-checks the deadline

    if (stdin_slot >= 0 && (fds[stdin_slot].revents & (POLLOUT | POLLERR))) {
      const ssize_t n = write(child.stdin_fd(), outgoing.data() + sent,
                              outgoing.size() - sent);
      if (n > 0) {
        sent += static_cast<std::size_t>(n);
        if (sent == outgoing.size()) child.close_stdin();
      } else if (n < 0 && errno != EAGAIN && errno != EWOULDBLOCK) {
        // Child closed stdin early; it may still answer from what it read.
        child.close_stdin();
      }
    }

    if (stdout_slot >= 0 &&
        (fds[stdout_slot].revents & (POLLIN | POLLHUP | POLLERR))) {
      char buffer[4096];
      const ssize_t n = read(child.stdout_fd(), buffer, sizeof(buffer));
      if (n > 0) {
        incoming.append(buffer, static_cast<std::size_t>(n));
        std::size_t start = 0;
        for (;;) {
          const std::size_t eol = incoming.find('\n', start);
          if (eol == std::string::npos) break;
          handle_line(incoming.substr(start, eol - start));
          start = eol + 1;
        }
        incoming.erase(0, start);
      } else if (n == 0) {
        stdout_open = false;
        child.close_stdout();
      } else if (errno != EAGAIN && errno != EWOULDBLOCK) {
        stdout_open = false;
        child.close_stdout();
      }
    }
  }

  if (!incoming.empty() &&
      incoming.find_first_not_of(" \t\r\n") != std::string::npos) {
    handle_line(incoming);
  }

  if (answered_count < batch.size()) {
    const int status = child.wait();
    std::size_t first_missing = 0;
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (!answered[i]) {
        first_missing = batch[i].first;
        break;
      }
    }
    if (status != 0) {
      throw AdapterError(
          "adapter process exited with status " + std::to_string(status) +
          " before answering " +
          std::to_string(batch.size() - answered_count) + " of " +
          std::to_string(batch.size()) + " requests");
    }
    throw AdapterError("adapter returned no result for id " +
                       std::to_string(first_missing));
  }
  return results;
}

}  // namespace litscan
