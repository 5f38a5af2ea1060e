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

#ifndef MGIT_TRACKER_H_
#define MGIT_TRACKER_H_

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mgit/git_repository.h"
#include "mgit/similarity.h"

namespace mgit {

class PathNotFound : public std::runtime_error {
 public:
  explicit PathNotFound(const std::string& path)
      : std::runtime_error("path not found: " + path), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// The path exists in more than one of the selected starting refs.
class AmbiguousStart : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TrackerConfig {
  int threshold = 50;  // -M, percent in [1, 100]
  // -C; copies are only detected when set.
  std::optional<int> copy_threshold;
  SimilarityMetric metric = SimilarityMetric::kGitBytes;
  // Candidate starting refs; empty means HEAD.
  std::vector<std::string> refs;

  bool detect_copies() const { return copy_threshold.has_value(); }
  // Throws std::invalid_argument on out-of-range thresholds.
  void Validate() const;
};

enum class StepKind { kAdd, kModify, kRename, kCopy };

std::string_view StepKindName(StepKind kind);

struct TrackStep {
  ObjectId commit;
  StepKind kind = StepKind::kAdd;
  std::optional<std::string> old_path;  // RENAME/COPY only
  std::string new_path;
  std::optional<Ratio> score;  // RENAME/COPY only
};

// Follows single paths back through history. Blob fingerprints are cached
// and shared; Follow may be called from several threads at once.
class Tracker {
 public:
  Tracker(GitRepository& repo, TrackerConfig config);

  // Newest step first; the last step is the ADD. Throws PathNotFound or
  // AmbiguousStart.
  std::vector<TrackStep> Follow(const std::string& path);
  // Same walk with a different configuration, sharing the cache.
  std::vector<TrackStep> Follow(const std::string& path,
                                const TrackerConfig& config);

  // Starting commit for `path` under `config`.
  ObjectId StartCommit(const std::string& path, const TrackerConfig& config);

  const TrackerConfig& config() const { return config_; }

 private:
  const Fingerprint& FingerprintOf(const ObjectId& blob);

  GitRepository& repo_;
  TrackerConfig config_;
  std::mutex mu_;
  std::unordered_map<ObjectId, std::unique_ptr<Fingerprint>> fingerprints_;
};

// One-shot form of Tracker::Follow.
std::vector<TrackStep> Follow(GitRepository& repo, const std::string& path,
                              const TrackerConfig& config);

// Number of RENAME plus COPY steps.
std::size_t CountRenames(const std::vector<TrackStep>& steps);
// Number of non-ADD steps.
std::size_t CountChanges(const std::vector<TrackStep>& steps);

// One line per step: commit, kind, oldPath, newPath, score ("num/den"),
// TAB-separated; absent fields are empty.
std::string StepsToTsv(const std::vector<TrackStep>& steps);
std::string StepsToJson(const std::vector<TrackStep>& steps);

}  // namespace mgit

#endif  // MGIT_TRACKER_H_
