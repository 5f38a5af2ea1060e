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

// mgit command line: convert, track, evaluate, compare.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mgit/evaluation.h"
#include "mgit/git_repository.h"
#include "mgit/rewriter.h"
#include "mgit/tracker.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mgit::IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// CLI11 long options cannot be spelled with one dash, so `-M-a` and `-M-b`
// are rewritten to their long forms before parsing.
std::vector<std::string> NormalizeArgs(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a.starts_with("-M-a") || a.starts_with("-M-b")) a = "-" + a;
    args.push_back(std::move(a));
  }
  std::reverse(args.begin(), args.end());  // CLI11 wants them reversed
  return args;
}

mgit::SimilarityMetric ParseMetric(const std::string& name) {
  return name == "lines" ? mgit::SimilarityMetric::kLines
                         : mgit::SimilarityMetric::kGitBytes;
}

std::vector<int> ParseThresholds(const std::string& list) {
  std::vector<int> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty() || v < 1 || v > 100) {
      throw CLI::ValidationError("--thresholds",
                                 "expected comma-separated integers in 1..100");
    }
    out.push_back(v);
  }
  if (out.empty()) {
    throw CLI::ValidationError("--thresholds", "empty threshold list");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Method-level Git history rewriting and tracking"};
  app.name("mgit");
  app.require_subcommand(1);

  // convert
  auto* convert = app.add_subcommand("convert", "Rewrite a repository");
  std::string src, dst, stats_json;
  bool plain = false, no_h1 = false, no_h2 = false, fields = false,
       keep_java = false;
  std::vector<std::string> refs;
  std::size_t max_name_bytes = 255;
  convert->add_option("--src", src, "Source repository")->required();
  convert->add_option("--dst", dst, "Destination (absent or empty)")
      ->required();
  convert->add_flag("--plain", plain, "Keep original line layout");
  convert->add_flag("--no-h1", no_h1, "Do not tag terminators");
  convert->add_flag("--no-h2", no_h2, "Keep parameter parens and body braces");
  convert->add_flag("--fields", fields, "Also emit .fjava field files");
  convert->add_flag("--keep-java", keep_java, "Keep the original .java files");
  convert->add_option("--ref", refs, "Ref to convert (repeatable)");
  convert->add_option("--max-name-bytes", max_name_bytes,
                      "File name byte limit")
      ->check(CLI::Range(std::size_t{32}, std::size_t{4096}));
  convert->add_option("--stats-json", stats_json, "Write stats JSON here");

  // track
  auto* track = app.add_subcommand("track", "Follow one file's history");
  std::string repo, path, metric = "git-bytes", format = "tsv";
  int rename_t = 50, copy_t = 0;
  track->add_option("--repo", repo, "Repository")->required();
  track->add_option("--path", path, "Path at HEAD")->required();
  track->add_option("-M", rename_t, "Rename threshold (percent)")
      ->required()
      ->check(CLI::Range(1, 100));
  auto* copy_opt = track->add_option("-C", copy_t, "Copy threshold (percent)")
                       ->check(CLI::Range(1, 100));
  track->add_option("--metric", metric, "Similarity metric")
      ->check(CLI::IsMember({"git-bytes", "lines"}));
  track->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}));

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Score tracking vs. oracle");
  std::string eval_repo, oracle_path, thresholds = "20,25,30,35,40,45,50,55,60,65,70,75,80";
  evaluate->add_option("--repo", eval_repo, "Repository")->required();
  evaluate->add_option("--oracle", oracle_path, "Oracle JSON")->required();
  evaluate->add_option("--thresholds", thresholds,
                       "Comma-separated percentages");

  // compare
  auto* compare = app.add_subcommand("compare", "Compare two conversions");
  std::string repo_a, repo_b, pairs_path;
  int threshold_a = 55, threshold_b = 25;
  compare->add_option("--repo-a", repo_a, "Repository A")->required();
  compare->add_option("--repo-b", repo_b, "Repository B")->required();
  compare->add_option("--pairs", pairs_path, "pathA<TAB>pathB lines")
      ->required();
  compare->add_option("--M-a", threshold_a, "Threshold for A (-M-a)")
      ->check(CLI::Range(1, 100));
  compare->add_option("--M-b", threshold_b, "Threshold for B (-M-b)")
      ->check(CLI::Range(1, 100));

  std::vector<int> threshold_list;
  try {
    app.parse(NormalizeArgs(argc, argv));
    if (*evaluate) threshold_list = ParseThresholds(thresholds);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*convert) {
      mgit::ConversionConfig config;
      config.render.line_format =
          plain ? mgit::LineFormat::kPlain : mgit::LineFormat::kTokenPerLine;
      config.render.heuristic1 = !no_h1;
      config.render.heuristic2 = !no_h2;
      config.emit_fields = fields;
      config.keep_original_java = keep_java;
      config.refs = refs;
      config.name_policy.max_file_name_bytes = max_name_bytes;
      const mgit::ConversionStats stats =
          mgit::RewriteHistory(src, dst, config, &std::cerr);
      const std::string json = stats.ToJson();
      std::cout << json << "\n";
      if (!stats_json.empty()) {
        std::ofstream out(stats_json);
        out << json << "\n";
        if (!out) throw mgit::IoError("cannot write " + stats_json);
      }
      return kExitOk;
    }
    if (*track) {
      mgit::TrackerConfig config;
      config.threshold = rename_t;
      if (*copy_opt) config.copy_threshold = copy_t;
      config.metric = ParseMetric(metric);
      auto r = mgit::GitRepository::Open(repo);
      const auto steps = mgit::Follow(*r, path, config);
      std::cout << (format == "json" ? mgit::StepsToJson(steps)
                                     : mgit::StepsToTsv(steps));
      return kExitOk;
    }
    if (*evaluate) {
      const auto oracle = mgit::ParseOracle(ReadFile(oracle_path));
      mgit::TrackerConfig config;
      config.copy_threshold = config.threshold;  // -M t -C t
      auto r = mgit::GitRepository::Open(eval_repo);
      const auto result = mgit::Evaluate(*r, oracle, threshold_list, config);
      std::cout << mgit::MetricsToCsv(result.metrics);
      for (const auto& [p, why] : result.errors) {
        std::cerr << "mgit: skipped " << p << ": " << why << "\n";
      }
      return result.errors.empty() ? kExitOk : kExitFailure;
    }
    if (*compare) {
      const auto pairs = mgit::ParsePairs(ReadFile(pairs_path));
      mgit::TrackerConfig a, b;
      a.threshold = threshold_a;
      a.copy_threshold = threshold_a;
      b.threshold = threshold_b;
      b.copy_threshold = threshold_b;
      auto ra = mgit::GitRepository::Open(repo_a);
      auto rb = mgit::GitRepository::Open(repo_b);
      std::cout << mgit::CompareToJson(
          mgit::CompareModes(*ra, *rb, pairs, a, b));
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "mgit: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
