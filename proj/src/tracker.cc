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

#include "mgit/tracker.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace mgit {
namespace {

const TreeEntry* Find(const TreeListing& flat, std::string_view path) {
  auto it = std::lower_bound(
      flat.begin(), flat.end(), path,
      [](const TreeEntry& e, std::string_view p) { return e.name < p; });
  if (it == flat.end() || it->name != path) return nullptr;
  return &*it;
}

bool Trackable(const TreeEntry& e) { return e.IsBlob(); }

}  // namespace

void TrackerConfig::Validate() const {
  if (threshold < 1 || threshold > 100) {
    throw std::invalid_argument("rename threshold must be in 1..100");
  }
  if (copy_threshold && (*copy_threshold < 1 || *copy_threshold > 100)) {
    throw std::invalid_argument("copy threshold must be in 1..100");
  }
}

std::string_view StepKindName(StepKind kind) {
  switch (kind) {
    case StepKind::kAdd:
      return "ADD";
    case StepKind::kModify:
      return "MODIFY";
    case StepKind::kRename:
      return "RENAME";
    case StepKind::kCopy:
      return "COPY";
  }
  return "?";
}

Tracker::Tracker(GitRepository& repo, TrackerConfig config)
    : repo_(repo), config_(std::move(config)) {
  config_.Validate();
}

const Fingerprint& Tracker::FingerprintOf(const ObjectId& blob) {
  {
    std::lock_guard lock(mu_);
    if (auto it = fingerprints_.find(blob); it != fingerprints_.end()) {
      return *it->second;
    }
  }
  auto fp = std::make_unique<Fingerprint>(MakeFingerprint(repo_.ReadBlob(blob)));
  std::lock_guard lock(mu_);
  // Another thread may have won; keep the first.
  auto [it, inserted] = fingerprints_.emplace(blob, std::move(fp));
  return *it->second;
}

ObjectId Tracker::StartCommit(const std::string& path,
                              const TrackerConfig& config) {
  if (config.refs.empty()) {
    const auto head = repo_.ResolveCommit("HEAD");
    if (!head) throw PathNotFound(path);
    const TreeEntry* e =
        Find(*repo_.ListTreeRecursive(repo_.ReadCommit(*head).tree_id), path);
    if (!e || !Trackable(*e)) throw PathNotFound(path);
    return *head;
  }
  std::set<ObjectId> starts;
  for (const std::string& ref : config.refs) {
    const auto id = repo_.ResolveCommit(ref);
    if (!id) throw PathNotFound(ref + ":" + path);
    const TreeEntry* e =
        Find(*repo_.ListTreeRecursive(repo_.ReadCommit(*id).tree_id), path);
    if (e && Trackable(*e)) starts.insert(*id);
  }
  if (starts.empty()) throw PathNotFound(path);
  if (starts.size() > 1) {
    throw AmbiguousStart(path + " exists in several selected refs; pin one");
  }
  return *starts.begin();
}

std::vector<TrackStep> Tracker::Follow(const std::string& path) {
  return Follow(path, config_);
}

std::vector<TrackStep> Tracker::Follow(const std::string& start_path,
                                       const TrackerConfig& config) {
  config.Validate();
  std::vector<TrackStep> steps;
  ObjectId commit = StartCommit(start_path, config);
  std::string path = start_path;
  while (true) {
    const CommitRecord c = repo_.ReadCommit(commit);
    const auto tree = repo_.ListTreeRecursive(c.tree_id);
    const TreeEntry* here = Find(*tree, path);
    if (c.parent_ids.empty()) {
      steps.push_back({commit, StepKind::kAdd, std::nullopt, path, std::nullopt});
      break;
    }
    // First parent, unless only another parent has the path.
    ObjectId parent_id = c.parent_ids.front();
    auto parent_tree = repo_.ListTreeRecursive(repo_.ReadCommit(parent_id).tree_id);
    const TreeEntry* before = Find(*parent_tree, path);
    for (std::size_t p = 1; p < c.parent_ids.size() && !before; ++p) {
      auto other = repo_.ListTreeRecursive(
          repo_.ReadCommit(c.parent_ids[p]).tree_id);
      if (const TreeEntry* e = Find(*other, path); e && Trackable(*e)) {
        parent_id = c.parent_ids[p];
        parent_tree = other;
        before = e;
      }
    }
    if (before && !Trackable(*before)) before = nullptr;
    if (before) {
      if (before->id != here->id) {
        steps.push_back(
            {commit, StepKind::kModify, std::nullopt, path, std::nullopt});
      }
      commit = parent_id;
      continue;
    }

    // The path appears in this commit: look for its source in the parent.
    const Fingerprint& target = FingerprintOf(here->id);
    std::optional<Ratio> best;
    const TreeEntry* best_entry = nullptr;
    bool best_is_copy = false;
    for (const TreeEntry& e : *parent_tree) {
      if (!Trackable(e)) continue;
      const TreeEntry* now = Find(*tree, e.name);
      const bool retained = now && Trackable(*now);
      int threshold = config.threshold;
      if (retained) {
        if (!config.copy_threshold) continue;
        threshold = *config.copy_threshold;
      }
      const Ratio score = Similarity(target, FingerprintOf(e.id), config.metric);
      if (!score.AtLeastPercent(threshold)) continue;
      // Parent listing is sorted, so the first maximum has the smallest path.
      if (!best || score > *best) {
        best = score;
        best_entry = &e;
        best_is_copy = retained;
      }
    }
    if (!best_entry) {
      steps.push_back({commit, StepKind::kAdd, std::nullopt, path, std::nullopt});
      break;
    }
    steps.push_back({commit, best_is_copy ? StepKind::kCopy : StepKind::kRename,
                     best_entry->name, path, best});
    path = best_entry->name;
    commit = parent_id;
  }
  return steps;
}

std::vector<TrackStep> Follow(GitRepository& repo, const std::string& path,
                              const TrackerConfig& config) {
  Tracker tracker(repo, config);
  return tracker.Follow(path);
}

std::size_t CountRenames(const std::vector<TrackStep>& steps) {
  return static_cast<std::size_t>(
      std::count_if(steps.begin(), steps.end(), [](const TrackStep& s) {
        return s.kind == StepKind::kRename || s.kind == StepKind::kCopy;
      }));
}

std::size_t CountChanges(const std::vector<TrackStep>& steps) {
  return static_cast<std::size_t>(std::count_if(
      steps.begin(), steps.end(),
      [](const TrackStep& s) { return s.kind != StepKind::kAdd; }));
}

std::string StepsToTsv(const std::vector<TrackStep>& steps) {
  std::ostringstream out;
  for (const TrackStep& s : steps) {
    out << s.commit << '\t' << StepKindName(s.kind) << '\t'
        << s.old_path.value_or("") << '\t' << s.new_path << '\t'
        << (s.score ? s.score->ToString() : "") << '\n';
  }
  return out.str();
}

std::string StepsToJson(const std::vector<TrackStep>& steps) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const TrackStep& s : steps) {
    nlohmann::ordered_json j;
    j["commit"] = s.commit;
    j["kind"] = StepKindName(s.kind);
    j["oldPath"] = s.old_path ? nlohmann::ordered_json(*s.old_path) : nullptr;
    j["newPath"] = s.new_path;
    if (s.score) {
      j["score"] = {{"numerator", s.score->num},
                    {"denominator", s.score->den},
                    {"value", s.score->value()}};
    } else {
      j["score"] = nullptr;
    }
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace mgit
