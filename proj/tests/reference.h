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

#ifndef MGIT_TESTS_REFERENCE_H_
#define MGIT_TESTS_REFERENCE_H_

// Slow, independent re-implementations used as test oracles, plus random
// history generators.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "mgit/similarity.h"
#include "test_util.h"

namespace mgit::testing {

std::vector<std::string> SplitLines(const std::string& s);

// Multiset of whole lines, over the larger line count.
Ratio NaiveLines(const std::string& a, const std::string& b);
// Multiset of 64-byte line chunks, weighted by length, over the larger size.
Ratio NaiveBytes(const std::string& a, const std::string& b);
Ratio NaiveScore(const std::string& a, const std::string& b,
                 SimilarityMetric metric);

struct BruteStep {
  std::string commit;
  std::string kind;  // ADD, MODIFY, RENAME, COPY
  std::string old_path;
  std::string new_path;
  std::optional<Ratio> score;
  bool operator==(const BruteStep&) const = default;
};

// Follows paths from HEAD using only git plumbing output and a full score
// matrix over every (source, added) pair of each commit. Trees, parents and
// matrices are cached across calls.
class BruteForceTracker {
 public:
  explicit BruteForceTracker(std::filesystem::path repo);
  std::vector<BruteStep> Follow(const std::string& path, int threshold,
                                std::optional<int> copy_threshold,
                                SimilarityMetric metric);

 private:
  using Matrix = std::map<std::pair<std::string, std::string>, Ratio>;
  const Files& Tree(const std::string& commit);
  const std::vector<std::string>& Parents(const std::string& commit);
  const Matrix& Scores(const std::string& commit, const std::string& parent,
                       SimilarityMetric metric);

  std::filesystem::path repo_;
  std::string head_;
  std::map<std::string, Files> trees_;
  std::map<std::string, std::vector<std::string>> parents_;
  std::map<std::tuple<std::string, std::string, SimilarityMetric>, Matrix> scores_;
};

std::vector<BruteStep> BruteFollow(const std::filesystem::path& repo,
                                   const std::string& path, int threshold,
                                   std::optional<int> copy_threshold,
                                   SimilarityMetric metric);

// Linear history of small token files with renames, copies, edits, adds and
// deletes. At most `max_files` files per commit.
void GenerateTokenHistory(RepoBuilder& b, unsigned seed, int commits,
                          int max_files);

// Java project history: `files` classes in a few packages, each commit
// editing, adding, renaming or deleting methods in 1-3 classes, with an
// occasional class rename.
void GenerateJavaHistory(RepoBuilder& b, unsigned seed, int commits,
                         int files);

// `count` compilable-looking Java files mixing many syntactic constructs
// (generics, lambdas, switch forms, records, enums, anonymous and inner
// classes, text blocks, annotations).
std::vector<std::string> JavaCorpus(unsigned seed, int count);

// Three commits of five method files; returns the matching oracle JSON.
// At t=50 with copies on:
//   one.mjava    renamed once                      detected 1, expected 1
//   two.mjava    rewritten while moving (< 50%)    detected 0, expected 1
//   three.mjava  renamed twice                     detected 2, expected 1
//   four.mjava   copied from a kept file           detected 1, expected 0
//   five.mjava   edited in place                   detected 0, expected 0
// TP 2, FP 2, FN 1: P 2/4, R 2/3, F 4/7.
std::string BuildFiveMethodRepo(RepoBuilder& b);

}  // namespace mgit::testing

#endif  // MGIT_TESTS_REFERENCE_H_
