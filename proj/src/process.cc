// Copyright 2026 The mgit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mgit/process.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <stdexcept>

namespace mgit {
namespace {

void IgnoreSigpipe() {
  static const bool once = [] {
    signal(SIGPIPE, SIG_IGN);
    return true;
  }();
  (void)once;
}

[[noreturn]] void ThrowErrno(const std::string& what) {
  throw std::runtime_error(what + ": " + std::strerror(errno));
}

int DecodeStatus(int status) {
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  if (WIFSIGNALED(status)) return 128 + WTERMSIG(status);
  return -1;
}

struct Pipe {
  int fds[2] = {-1, -1};
  void Open() {
    if (pipe2(fds, O_CLOEXEC) != 0) ThrowErrno("pipe");
  }
  void Close() {
    for (int& fd : fds) {
      if (fd >= 0) close(fd);
      fd = -1;
    }
  }
};

// Forks and execs argv; child-side fds are dup2'ed onto 0/1/2.
pid_t Spawn(const std::vector<std::string>& argv,
            const std::filesystem::path& cwd, int child_in, int child_out,
            int child_err) {
  std::vector<char*> args;
  for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
  args.push_back(nullptr);
  const std::string dir = cwd.string();
  const pid_t pid = fork();
  if (pid < 0) ThrowErrno("fork");
  if (pid == 0) {
    if (child_in >= 0) dup2(child_in, 0);
    if (child_out >= 0) dup2(child_out, 1);
    if (child_err >= 0) dup2(child_err, 2);
    if (!dir.empty() && chdir(dir.c_str()) != 0) _exit(127);
    execvp(args[0], args.data());
    _exit(127);
  }
  return pid;
}

}  // namespace

Process::Process(const std::vector<std::string>& argv, const Options& options) {
  IgnoreSigpipe();
  Pipe in, out;
  int devnull = -1;
  auto null_fd = [&devnull] {
    if (devnull < 0) devnull = open("/dev/null", O_RDWR | O_CLOEXEC);
    return devnull;
  };
  int child_in = -1, child_out = -1, child_err = -1;
  if (options.in == Stream::kPipe) {
    in.Open();
    child_in = in.fds[0];
  } else if (options.in == Stream::kNull) {
    child_in = null_fd();
  }
  if (options.out == Stream::kPipe) {
    out.Open();
    child_out = out.fds[1];
  } else if (options.out == Stream::kNull) {
    child_out = null_fd();
  }
  if (options.err == Stream::kNull) child_err = null_fd();
  pid_ = Spawn(argv, options.cwd, child_in, child_out, child_err);
  if (options.in == Stream::kPipe) {
    close(in.fds[0]);
    in_fd_ = in.fds[1];
  }
  if (options.out == Stream::kPipe) {
    close(out.fds[1]);
    out_fd_ = out.fds[0];
  }
  if (devnull >= 0) close(devnull);
}

Process::~Process() {
  if (pid_ > 0 && status_ < 0) {
    try {
      Wait();
    } catch (...) {
    }
  }
  if (out_fd_ >= 0) close(out_fd_);
}

void Process::Write(std::string_view data) {
  while (!data.empty()) {
    const ssize_t n = write(in_fd_, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      ThrowErrno("write to child process");
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
}

void Process::CloseStdin() {
  if (in_fd_ >= 0) close(in_fd_);
  in_fd_ = -1;
}

bool Process::Fill() {
  if (buffer_pos_ > 0) {
    buffer_.erase(0, buffer_pos_);
    buffer_pos_ = 0;
  }
  char chunk[65536];
  while (true) {
    const ssize_t n = read(out_fd_, chunk, sizeof chunk);
    if (n < 0 && errno == EINTR) continue;
    if (n < 0) ThrowErrno("read from child process");
    if (n == 0) return false;
    buffer_.append(chunk, static_cast<std::size_t>(n));
    return true;
  }
}

std::string Process::ReadLine() {
  while (true) {
    const std::size_t nl = buffer_.find('\n', buffer_pos_);
    if (nl != std::string::npos) {
      std::string line = buffer_.substr(buffer_pos_, nl - buffer_pos_);
      buffer_pos_ = nl + 1;
      return line;
    }
    if (!Fill()) throw std::runtime_error("unexpected end of child output");
  }
}

std::string Process::ReadExactly(std::size_t n) {
  while (buffer_.size() - buffer_pos_ < n) {
    if (!Fill()) throw std::runtime_error("unexpected end of child output");
  }
  std::string data = buffer_.substr(buffer_pos_, n);
  buffer_pos_ += n;
  return data;
}

int Process::Wait() {
  CloseStdin();
  if (status_ >= 0) return status_;
  int raw = 0;
  while (waitpid(pid_, &raw, 0) < 0) {
    if (errno != EINTR) ThrowErrno("waitpid");
  }
  status_ = DecodeStatus(raw);
  return status_;
}

CommandResult RunCommand(const std::vector<std::string>& argv,
                         const std::filesystem::path& cwd,
                         std::string_view input) {
  IgnoreSigpipe();
  Pipe in, out, err;
  in.Open();
  out.Open();
  err.Open();
  const pid_t pid = Spawn(argv, cwd, in.fds[0], out.fds[1], err.fds[1]);
  close(in.fds[0]);
  close(out.fds[1]);
  close(err.fds[1]);
  int in_fd = in.fds[1];
  if (input.empty()) {
    close(in_fd);
    in_fd = -1;
  } else {
    fcntl(in_fd, F_SETFL, O_NONBLOCK);
  }
  CommandResult result;
  int fds[2] = {out.fds[0], err.fds[0]};
  std::string* sinks[2] = {&result.out, &result.err};
  std::size_t written = 0;
  char chunk[65536];
  while (fds[0] >= 0 || fds[1] >= 0 || in_fd >= 0) {
    pollfd pfds[3];
    int count = 0;
    int index[3];
    for (int k = 0; k < 2; ++k) {
      if (fds[k] >= 0) {
        pfds[count] = {fds[k], POLLIN, 0};
        index[count++] = k;
      }
    }
    if (in_fd >= 0) {
      pfds[count] = {in_fd, POLLOUT, 0};
      index[count++] = 2;
    }
    if (poll(pfds, count, -1) < 0) {
      if (errno == EINTR) continue;
      ThrowErrno("poll");
    }
    for (int p = 0; p < count; ++p) {
      if (pfds[p].revents == 0) continue;
      if (index[p] == 2) {
        const ssize_t n =
            write(in_fd, input.data() + written, input.size() - written);
        if (n > 0) written += static_cast<std::size_t>(n);
        if (n < 0 && errno != EAGAIN && errno != EINTR) written = input.size();
        if (written >= input.size()) {
          close(in_fd);
          in_fd = -1;
        }
        continue;
      }
      const int k = index[p];
      const ssize_t n = read(fds[k], chunk, sizeof chunk);
      if (n > 0) {
        sinks[k]->append(chunk, static_cast<std::size_t>(n));
      } else if (n == 0 || (errno != EINTR && errno != EAGAIN)) {
        close(fds[k]);
        fds[k] = -1;
      }
    }
  }
  int raw = 0;
  while (waitpid(pid, &raw, 0) < 0) {
    if (errno != EINTR) ThrowErrno("waitpid");
  }
  result.exit_code = DecodeStatus(raw);
  return result;
}

}  // namespace mgit
