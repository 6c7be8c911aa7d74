// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/pipeline/heavy_scorer.hpp"

#include "argrec/common.hpp"

#include <json.hpp>

#include <chrono>
#include <csignal>
#include <poll.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

namespace argrec::pipeline {

using nlohmann::json;

std::optional<std::vector<double>>
ModelHeavyScorer::score(const std::vector<std::string> &context,
                        const std::vector<std::vector<std::string>> &cands, std::string &) {
  lm::LayerStack layers{{&model_.global(), nullptr}};
  auto ctx = model_.vocab().encode(context);
  std::vector<double> out;
  out.reserve(cands.size());
  for (const auto &c : cands) {
    auto ids = model_.vocab().encode(c);
    out.push_back(ids.empty() ? 1.0 : model_.sequenceProb(layers, ctx, ids));
  }
  return out;
}

std::string handleHeavyLine(HeavyScorer &scorer, const std::string &line) {
  json id = nullptr;
  try {
    json req = json::parse(line);
    if (req.contains("id"))
      id = req["id"];
    auto ctx = req.at("context").get<std::vector<std::string>>();
    auto cands = req.at("candidates").get<std::vector<std::vector<std::string>>>();
    std::string err;
    auto scores = scorer.score(ctx, cands, err);
    if (!scores)
      return json{{"id", id}, {"error", err}}.dump();
    return json{{"id", id}, {"scores", *scores}}.dump();
  } catch (const json::exception &e) {
    return json{{"id", id}, {"error", std::string("malformed request: ") + e.what()}}.dump();
  }
}

ProcessHeavyScorer::ProcessHeavyScorer(std::vector<std::string> argv, int timeoutMs)
    : timeoutMs_(timeoutMs) {
  if (argv.empty())
    throw ContractViolation("heavy scorer command is empty");
  int sv[2];
  if (socketpair(AF_UNIX, SOCK_STREAM, 0, sv) != 0)
    throw Error("heavy scorer: socketpair failed");
  pid_t pid = fork();
  if (pid < 0) {
    close(sv[0]);
    close(sv[1]);
    throw Error("heavy scorer: fork failed");
  }
  if (pid == 0) {
    close(sv[0]);
    dup2(sv[1], STDIN_FILENO);
    dup2(sv[1], STDOUT_FILENO);
    close(sv[1]);
    std::vector<char *> args;
    for (auto &a : argv)
      args.push_back(a.data());
    args.push_back(nullptr);
    execvp(args[0], args.data());
    _exit(127);
  }
  close(sv[1]);
  fd_ = sv[0];
  pid_ = pid;
}

ProcessHeavyScorer::~ProcessHeavyScorer() { shutdown(); }

void ProcessHeavyScorer::shutdown() {
  if (fd_ >= 0) {
    close(fd_);
    fd_ = -1;
  }
  if (pid_ > 0) {
    // Closing the socket ends a well-behaved scorer; a stuck one is killed.
    int status;
    for (int i = 0; i < 20; ++i) {
      if (waitpid(pid_, &status, WNOHANG) == pid_) {
        pid_ = -1;
        return;
      }
      usleep(5000);
    }
    kill(pid_, SIGKILL);
    waitpid(pid_, &status, 0);
    pid_ = -1;
  }
}

bool ProcessHeavyScorer::readLine(std::string &line, std::string &error) {
  auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeoutMs_);
  while (true) {
    auto nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      return true;
    }
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
                    deadline - std::chrono::steady_clock::now())
                    .count();
    if (left <= 0) {
      error = "heavy scorer timed out after " + std::to_string(timeoutMs_) + " ms";
      return false;
    }
    pollfd p{fd_, POLLIN, 0};
    int rc = poll(&p, 1, static_cast<int>(left));
    if (rc < 0) {
      error = "heavy scorer: poll failed";
      return false;
    }
    if (rc == 0)
      continue;
    char buf[4096];
    ssize_t n = read(fd_, buf, sizeof buf);
    if (n <= 0) {
      error = "heavy scorer closed its output";
      return false;
    }
    buffer_.append(buf, static_cast<size_t>(n));
  }
}

std::optional<std::vector<double>>
ProcessHeavyScorer::score(const std::vector<std::string> &context,
                          const std::vector<std::vector<std::string>> &cands,
                          std::string &error) {
  if (fd_ < 0) {
    error = "heavy scorer unavailable";
    return std::nullopt;
  }
  long id = nextId_++;
  std::string msg = json{{"id", id}, {"context", context}, {"candidates", cands}}.dump() + "\n";
  size_t off = 0;
  while (off < msg.size()) {
    ssize_t n = send(fd_, msg.data() + off, msg.size() - off, MSG_NOSIGNAL);
    if (n <= 0) {
      error = "heavy scorer: write failed";
      shutdown();
      return std::nullopt;
    }
    off += static_cast<size_t>(n);
  }
  std::string line;
  if (!readLine(line, error)) {
    shutdown();
    return std::nullopt;
  }
  try {
    json resp = json::parse(line);
    if (resp.value("id", json()) != json(id)) {
      error = "heavy scorer: response id mismatch";
      return std::nullopt;
    }
    if (resp.contains("error")) {
      error = "heavy scorer: " + resp["error"].get<std::string>();
      return std::nullopt;
    }
    auto scores = resp.at("scores").get<std::vector<double>>();
    if (scores.size() != cands.size()) {
      error = "heavy scorer: expected " + std::to_string(cands.size()) + " scores, got " +
              std::to_string(scores.size());
      return std::nullopt;
    }
    for (double s : scores)
      if (!(s > 0.0 && s <= 1.0)) {
        error = "heavy scorer: score outside (0,1]";
        return std::nullopt;
      }
    return scores;
  } catch (const json::exception &e) {
    error = std::string("heavy scorer: bad response: ") + e.what();
    return std::nullopt;
  }
}

} // namespace argrec::pipeline
