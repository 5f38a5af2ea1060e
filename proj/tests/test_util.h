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

#ifndef MGIT_TESTS_TEST_UTIL_H_
#define MGIT_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "mgit/git_repository.h"

namespace mgit::testing {

// Removed recursively on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

using Files = std::map<std::string, std::string>;  // path -> content

// Builds a repository from full tree snapshots through fast-import, with
// fixed identities and timestamps so ids are reproducible.
class RepoBuilder {
 public:
  explicit RepoBuilder(std::filesystem::path dir);

  // Returns a handle (1-based) usable as a parent. With no parents the
  // commit is a root on `branch`.
  int Commit(const Files& files, std::vector<int> parents = {},
             const std::string& message = "change",
             const std::string& branch = "master");
  // Convenience: commit on top of the previous commit of `branch`.
  int CommitOn(const std::string& branch, const Files& files,
               const std::string& message = "change");
  // Incremental commit on `branch`: only the listed paths change.
  int Change(const std::string& branch, const Files& changed,
             const std::vector<std::string>& deleted = {},
             const std::string& message = "change");
  void Tag(const std::string& name, int commit, const std::string& message);
  void LightTag(const std::string& name, int commit);

  // Runs fast-import and points HEAD at `head_branch`. Returns the commit
  // ids by handle (index 0 unused).
  std::vector<ObjectId> Finish(const std::string& head_branch = "master");

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::string stream_;
  int count_ = 0;
  std::map<std::string, int> tips_;
};

// Files of `rev` (path -> content), read through `git ls-tree`/`cat-file`.
Files ReadTreeFiles(const std::filesystem::path& repo, const std::string& rev);

// Output of a git command; throws on nonzero exit.
std::string GitOut(const std::filesystem::path& repo,
                   const std::vector<std::string>& args,
                   const std::string& input = {});

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, const std::string& content);

// Path of the built CLI binary.
std::filesystem::path CliPath();

}  // namespace mgit::testing

#endif  // MGIT_TESTS_TEST_UTIL_H_
