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

#ifndef MGIT_EVALUATION_H_
#define MGIT_EVALUATION_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mgit/git_repository.h"
#include "mgit/similarity.h"
#include "mgit/tracker.h"

namespace mgit {

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A compared path missing from its repository.
class UnmappedPath : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleEntry {
  std::string method_path;
  std::uint64_t expected_rename_count = 0;
};

// JSON array of {"methodPath": ..., "expectedRenameCount": ...}. Throws
// OracleError on malformed or empty input.
std::vector<OracleEntry> ParseOracle(std::string_view json);

struct Counts {
  std::uint64_t true_positives = 0;
  std::uint64_t false_positives = 0;
  std::uint64_t false_negatives = 0;

  // Adds one method's contribution.
  void Add(std::uint64_t detected, std::uint64_t expected);
};

struct EvalMetrics {
  int threshold = 0;
  Counts counts;
  Ratio precision;  // 0/1 when nothing was detected
  Ratio recall;     // 0/1 when nothing was expected
  Ratio fmeasure;   // 2TP / (2TP + FP + FN); 0/1 when all counters are zero

  static EvalMetrics FromCounts(int threshold, const Counts& counts);
};

struct MethodResult {
  std::string method_path;
  std::uint64_t detected = 0;
  std::uint64_t expected = 0;
};

struct EvaluationResult {
  std::vector<EvalMetrics> metrics;               // one per threshold
  std::vector<std::vector<MethodResult>> detail;  // parallel to metrics
  // Entries that could not be followed, with the reason; skipped.
  std::vector<std::pair<std::string, std::string>> errors;
};

// For each threshold t, follows every oracle path with -M t (and -C t when
// `base.copy_threshold` is set) and micro-averages the counts.
EvaluationResult Evaluate(GitRepository& repo,
                          const std::vector<OracleEntry>& oracle,
                          const std::vector<int>& thresholds,
                          const TrackerConfig& base, unsigned threads = 0);

std::vector<int> DefaultThresholds();  // 20, 25, ..., 80

// "threshold,precision,recall,fmeasure" header plus one row per threshold,
// values as decimals with six digits.
std::string MetricsToCsv(const std::vector<EvalMetrics>& metrics);
std::string EvaluationToJson(const EvaluationResult& result);

struct MethodPair {
  std::string path_a;
  std::string path_b;
};

// TAB-separated "pathA<TAB>pathB" lines; blank lines and '#' comments are
// skipped. Throws std::invalid_argument on a malformed line.
std::vector<MethodPair> ParsePairs(std::string_view text);

struct PairResult {
  MethodPair pair;
  std::uint64_t renames_a = 0;
  std::uint64_t renames_b = 0;
  std::uint64_t changes_a = 0;  // non-ADD steps
  std::uint64_t changes_b = 0;
};

struct CompareSummary {
  std::uint64_t methods = 0;
  Ratio a_greater;  // fraction with renames_a > renames_b
  Ratio b_greater;
  Ratio equal;
  Ratio mean_changes_a;
  Ratio mean_changes_b;
  // Methods with no detected change in either repository.
  std::vector<MethodPair> never_changed;
};

struct CompareResult {
  std::vector<PairResult> pairs;
  CompareSummary summary;
};

// Throws UnmappedPath if a pair's path is missing from its repository.
CompareResult CompareModes(GitRepository& repo_a, GitRepository& repo_b,
                           const std::vector<MethodPair>& pairs,
                           const TrackerConfig& config_a,
                           const TrackerConfig& config_b);

std::string CompareToJson(const CompareResult& result);

}  // namespace mgit

#endif  // MGIT_EVALUATION_H_
