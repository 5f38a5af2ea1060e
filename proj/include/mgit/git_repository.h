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

#ifndef MGIT_GIT_REPOSITORY_H_
#define MGIT_GIT_REPOSITORY_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mgit/process.h"

namespace mgit {

using ObjectId = std::string;  // 40 lowercase hex digits

// I/O failure talking to a repository.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An object that should exist cannot be read or parsed.
class CorruptRepoError : public IoError {
 public:
  CorruptRepoError(const std::string& what, ObjectId id)
      : IoError(what + ": " + id), id_(std::move(id)) {}
  const ObjectId& id() const { return id_; }

 private:
  ObjectId id_;
};

inline constexpr std::uint32_t kModeTree = 040000;
inline constexpr std::uint32_t kModeBlob = 0100644;
inline constexpr std::uint32_t kModeExecutable = 0100755;
inline constexpr std::uint32_t kModeSymlink = 0120000;
inline constexpr std::uint32_t kModeGitlink = 0160000;

struct TreeEntry {
  std::string name;  // single path component, or a full path when flattened
  std::uint32_t mode = kModeBlob;
  ObjectId id;

  bool IsTree() const { return mode == kModeTree; }
  bool IsBlob() const {
    return mode == kModeBlob || mode == kModeExecutable || mode == kModeSymlink;
  }
  friend bool operator==(const TreeEntry&, const TreeEntry&) = default;
};

using TreeListing = std::vector<TreeEntry>;

struct Signature {
  std::string name;
  std::string email;
  std::int64_t time = 0;
  std::string tz;  // e.g. "+0900"
};

// `raw` is "Name <email> 1234567890 +0000".
Signature ParseSignature(std::string_view raw);

struct CommitRecord {
  ObjectId id;
  ObjectId tree_id;
  std::vector<ObjectId> parent_ids;
  std::string author;     // raw identity line value
  std::string committer;  // raw identity line value
  std::string encoding;   // empty when absent
  std::string message;

  Signature AuthorSignature() const { return ParseSignature(author); }
  Signature CommitterSignature() const { return ParseSignature(committer); }
};

struct TagRecord {
  ObjectId id;
  ObjectId object;
  std::string type;
  std::string name;
  std::string tagger;  // may be empty
  std::string message;
};

// Git object id of `content` stored as a blob.
ObjectId BlobId(std::string_view content);

// Read access to a repository through git plumbing. Object reads are
// serialized internally so one instance can be shared across threads.
class GitRepository {
 public:
  // Throws IoError if `path` is not inside a Git repository.
  static std::unique_ptr<GitRepository> Open(const std::filesystem::path& path);

  const std::filesystem::path& git_dir() const { return git_dir_; }
  const std::filesystem::path& work_dir() const { return work_dir_; }

  std::optional<ObjectId> ResolveCommit(const std::string& rev) const;
  // Full ref names and the object ids they point at, sorted by name.
  std::vector<std::pair<std::string, ObjectId>> ListRefs() const;
  // Target of HEAD if it is a symbolic ref.
  std::optional<std::string> HeadTarget() const;
  // Commits reachable from `tips`, parents before children.
  std::vector<ObjectId> RevList(const std::vector<ObjectId>& tips) const;

  std::string ObjectType(const ObjectId& id);
  CommitRecord ReadCommit(const ObjectId& id);
  TagRecord ReadTag(const ObjectId& id);
  std::string ReadBlob(const ObjectId& id);
  // One level of a tree, in Git's stored order.
  std::shared_ptr<const TreeListing> ReadTree(const ObjectId& id);
  // All non-tree entries below `id`, with full paths, sorted by path.
  std::shared_ptr<const TreeListing> ListTreeRecursive(const ObjectId& id);

  // Git command line in this repository.
  CommandResult Git(const std::vector<std::string>& args,
                    std::string_view input = {}) const;

 private:
  GitRepository(std::filesystem::path git_dir, std::filesystem::path work_dir);

  std::pair<std::string, std::string> ReadObject(const ObjectId& id);

  std::filesystem::path git_dir_;
  std::filesystem::path work_dir_;
  std::mutex mu_;
  std::unique_ptr<Process> batch_;
  std::unordered_map<ObjectId, std::shared_ptr<const TreeListing>> trees_;
  std::unordered_map<ObjectId, std::shared_ptr<const TreeListing>> flat_trees_;
};

// Runs `git <args>` in `cwd`.
CommandResult RunGit(const std::filesystem::path& cwd,
                     const std::vector<std::string>& args,
                     std::string_view input = {});

}  // namespace mgit

#endif  // MGIT_GIT_REPOSITORY_H_
