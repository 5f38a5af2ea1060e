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

#ifndef MGIT_PROCESS_H_
#define MGIT_PROCESS_H_

#include <sys/types.h>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace mgit {

// A child process with an optional pipe on stdin and stdout. Used to drive
// long-running git plumbing commands (`cat-file --batch`, `fast-import`).
class Process {
 public:
  enum class Stream { kPipe, kInherit, kNull };

  struct Options {
    std::filesystem::path cwd;
    Stream in = Stream::kPipe;
    Stream out = Stream::kPipe;
    Stream err = Stream::kInherit;
  };

  Process(const std::vector<std::string>& argv, const Options& options);
  ~Process();

  Process(const Process&) = delete;
  Process& operator=(const Process&) = delete;

  void Write(std::string_view data);
  void CloseStdin();

  // Reads through the next LF (which is stripped). Throws on EOF.
  std::string ReadLine();
  std::string ReadExactly(std::size_t n);

  // Closes stdin and waits; returns the exit status (128+signal if killed).
  int Wait();

 private:
  bool Fill();

  pid_t pid_ = -1;
  int in_fd_ = -1;
  int out_fd_ = -1;
  std::string buffer_;
  std::size_t buffer_pos_ = 0;
  int status_ = -1;
};

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Runs to completion, feeding `input` on stdin and capturing both outputs.
CommandResult RunCommand(const std::vector<std::string>& argv,
                         const std::filesystem::path& cwd = {},
                         std::string_view input = {});

}  // namespace mgit

#endif  // MGIT_PROCESS_H_
