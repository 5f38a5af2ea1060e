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

#include "mgit/evaluation.h"

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "parallel.h"

namespace mgit {
namespace {

Ratio Fraction(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return {0, 1};
  return {num, den};
}

nlohmann::ordered_json RatioJson(const Ratio& r) {
  return {{"numerator", r.num}, {"denominator", r.den}, {"value", r.value()}};
}

}  // namespace

std::vector<OracleEntry> ParseOracle(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw OracleError(std::string("oracle is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw OracleError("oracle must be a JSON array");
  if (doc.empty()) throw OracleError("oracle is empty");
  std::vector<OracleEntry> entries;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& item = doc[i];
    const std::string where = "oracle entry " + std::to_string(i);
    if (!item.is_object()) throw OracleError(where + " is not an object");
    auto path = item.find("methodPath");
    auto count = item.find("expectedRenameCount");
    if (path == item.end() || !path->is_string()) {
      throw OracleError(where + ": missing string methodPath");
    }
    if (count == item.end() || !count->is_number_unsigned()) {
      throw OracleError(where + ": expectedRenameCount must be a non-negative integer");
    }
    OracleEntry e{path->get<std::string>(), count->get<std::uint64_t>()};
    if (!e.method_path.ends_with(".mjava")) {
      throw OracleError(where + ": methodPath must end in .mjava");
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

void Counts::Add(std::uint64_t detected, std::uint64_t expected) {
  true_positives += std::min(detected, expected);
  false_positives += detected > expected ? detected - expected : 0;
  false_negatives += expected > detected ? expected - detected : 0;
}

EvalMetrics EvalMetrics::FromCounts(int threshold, const Counts& c) {
  EvalMetrics m;
  m.threshold = threshold;
  m.counts = c;
  const std::uint64_t tp = c.true_positives;
  m.precision = Fraction(tp, tp + c.false_positives);
  m.recall = Fraction(tp, tp + c.false_negatives);
  m.fmeasure = Fraction(2 * tp, 2 * tp + c.false_positives + c.false_negatives);
  return m;
}

std::vector<int> DefaultThresholds() {
  std::vector<int> t;
  for (int v = 20; v <= 80; v += 5) t.push_back(v);
  return t;
}

EvaluationResult Evaluate(GitRepository& repo,
                          const std::vector<OracleEntry>& oracle,
                          const std::vector<int>& thresholds,
                          const TrackerConfig& base, unsigned threads) {
  EvaluationResult result;
  Tracker tracker(repo, base);
  std::vector<const OracleEntry*> usable;
  for (const OracleEntry& e : oracle) {
    try {
      tracker.StartCommit(e.method_path, base);
      usable.push_back(&e);
    } catch (const std::exception& ex) {
      result.errors.emplace_back(e.method_path, ex.what());
    }
  }
  const unsigned workers = internal::WorkerCount(threads);
  for (int t : thresholds) {
    TrackerConfig config = base;
    config.threshold = t;
    if (config.copy_threshold) config.copy_threshold = t;
    std::vector<MethodResult> detail(usable.size());
    internal::ParallelFor(usable.size(), workers, [&](std::size_t i) {
      const OracleEntry& e = *usable[i];
      detail[i] = {e.method_path,
                   CountRenames(tracker.Follow(e.method_path, config)),
                   e.expected_rename_count};
    });
    Counts counts;
    for (const MethodResult& m : detail) counts.Add(m.detected, m.expected);
    result.metrics.push_back(EvalMetrics::FromCounts(t, counts));
    result.detail.push_back(std::move(detail));
  }
  return result;
}

std::string MetricsToCsv(const std::vector<EvalMetrics>& metrics) {
  std::string out = "threshold,precision,recall,fmeasure\n";
  char row[128];
  for (const EvalMetrics& m : metrics) {
    std::snprintf(row, sizeof row, "%d,%.6f,%.6f,%.6f\n", m.threshold,
                  m.precision.value(), m.recall.value(), m.fmeasure.value());
    out += row;
  }
  return out;
}

std::string EvaluationToJson(const EvaluationResult& result) {
  nlohmann::ordered_json j;
  j["metrics"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < result.metrics.size(); ++i) {
    const EvalMetrics& m = result.metrics[i];
    nlohmann::ordered_json row;
    row["threshold"] = m.threshold;
    row["truePositives"] = m.counts.true_positives;
    row["falsePositives"] = m.counts.false_positives;
    row["falseNegatives"] = m.counts.false_negatives;
    row["precision"] = RatioJson(m.precision);
    row["recall"] = RatioJson(m.recall);
    row["fmeasure"] = RatioJson(m.fmeasure);
    row["methods"] = nlohmann::ordered_json::array();
    for (const MethodResult& d : result.detail[i]) {
      row["methods"].push_back({{"methodPath", d.method_path},
                                {"detected", d.detected},
                                {"expected", d.expected}});
    }
    j["metrics"].push_back(std::move(row));
  }
  j["errors"] = nlohmann::ordered_json::array();
  for (const auto& [path, why] : result.errors) {
    j["errors"].push_back({{"methodPath", path}, {"error", why}});
  }
  return j.dump(2) + "\n";
}

std::vector<MethodPair> ParsePairs(std::string_view text) {
  std::vector<MethodPair> pairs;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size() ||
        line.find('\t', tab + 1) != std::string::npos) {
      throw std::invalid_argument("pairs line " + std::to_string(number) +
                                  ": expected pathA<TAB>pathB");
    }
    pairs.push_back({line.substr(0, tab), line.substr(tab + 1)});
  }
  return pairs;
}

CompareResult CompareModes(GitRepository& repo_a, GitRepository& repo_b,
                           const std::vector<MethodPair>& pairs,
                           const TrackerConfig& config_a,
                           const TrackerConfig& config_b) {
  Tracker tracker_a(repo_a, config_a);
  Tracker tracker_b(repo_b, config_b);
  CompareResult result;
  std::uint64_t a_greater = 0, b_greater = 0, equal = 0;
  std::uint64_t changes_a = 0, changes_b = 0;
  for (const MethodPair& pair : pairs) {
    std::vector<TrackStep> a, b;
    try {
      a = tracker_a.Follow(pair.path_a);
    } catch (const PathNotFound&) {
      throw UnmappedPath("not in repository A: " + pair.path_a);
    }
    try {
      b = tracker_b.Follow(pair.path_b);
    } catch (const PathNotFound&) {
      throw UnmappedPath("not in repository B: " + pair.path_b);
    }
    PairResult r{pair, CountRenames(a), CountRenames(b), CountChanges(a),
                 CountChanges(b)};
    if (r.renames_a > r.renames_b) {
      ++a_greater;
    } else if (r.renames_b > r.renames_a) {
      ++b_greater;
    } else {
      ++equal;
    }
    changes_a += r.changes_a;
    changes_b += r.changes_b;
    if (r.changes_a == 0 && r.changes_b == 0) {
      result.summary.never_changed.push_back(pair);
    }
    result.pairs.push_back(std::move(r));
  }
  CompareSummary& s = result.summary;
  s.methods = pairs.size();
  s.a_greater = Fraction(a_greater, s.methods);
  s.b_greater = Fraction(b_greater, s.methods);
  s.equal = Fraction(equal, s.methods);
  s.mean_changes_a = Fraction(changes_a, s.methods);
  s.mean_changes_b = Fraction(changes_b, s.methods);
  return result;
}

std::string CompareToJson(const CompareResult& result) {
  nlohmann::ordered_json j;
  j["pairs"] = nlohmann::ordered_json::array();
  for (const PairResult& p : result.pairs) {
    j["pairs"].push_back({{"pathA", p.pair.path_a},
                          {"pathB", p.pair.path_b},
                          {"renamesA", p.renames_a},
                          {"renamesB", p.renames_b},
                          {"changesA", p.changes_a},
                          {"changesB", p.changes_b}});
  }
  const CompareSummary& s = result.summary;
  nlohmann::ordered_json summary;
  summary["methods"] = s.methods;
  summary["aGreater"] = RatioJson(s.a_greater);
  summary["bGreater"] = RatioJson(s.b_greater);
  summary["equal"] = RatioJson(s.equal);
  summary["meanChangesA"] = RatioJson(s.mean_changes_a);
  summary["meanChangesB"] = RatioJson(s.mean_changes_b);
  summary["neverChanged"] = nlohmann::ordered_json::array();
  for (const MethodPair& p : s.never_changed) {
    summary["neverChanged"].push_back({{"pathA", p.path_a}, {"pathB", p.path_b}});
  }
  j["summary"] = std::move(summary);
  return j.dump(2) + "\n";
}

}  // namespace mgit
