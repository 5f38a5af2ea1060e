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

#ifndef MGIT_REWRITER_H_
#define MGIT_REWRITER_H_

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mgit/emitter.h"
#include "mgit/naming.h"

namespace mgit {

struct ConversionConfig {
  RenderConfig render;
  bool emit_fields = false;
  bool keep_original_java = false;
  bool pass_through_non_java = true;
  NamePolicy name_policy;

  // Full or short ref names to convert; empty converts all branches and tags.
  std::vector<std::string> refs;
  // Reuse conversions of unchanged blobs and subtrees across commits.
  bool use_blob_cache = true;
  // Worker threads for file conversion; 0 picks the hardware concurrency.
  unsigned threads = 0;
  // Populate the destination working tree after import.
  bool checkout = true;
};

// Name of the source-to-destination commit map written into the
// destination's git directory. One "src<TAB>dst" line per commit.
inline constexpr std::string_view kCommitMapFile = "commit-map.tsv";

struct JavaConversion {
  bool ok = false;
  std::string error;                // set when !ok
  std::vector<RenderedFile> files;  // paths relative to the .java directory
};

// Converts one .java file. `directory` only matters when the name policy
// bounds whole paths.
JavaConversion ConvertJavaSource(std::string_view content,
                                 const ConversionConfig& config,
                                 std::string_view directory = {});

struct TreeFile {
  std::string path;
  std::uint32_t mode = 0100644;
  std::string content;

  friend bool operator==(const TreeFile&, const TreeFile&) = default;
};

// In-memory tree conversion. Output is sorted by path and does not depend
// on input order. `skipped` (optional) receives unconvertible .java paths.
std::vector<TreeFile> ConvertTree(const std::vector<TreeFile>& files,
                                  const ConversionConfig& config,
                                  std::vector<std::string>* skipped = nullptr);

struct ConversionStats {
  std::uint64_t commits = 0;
  std::uint64_t files_emitted = 0;
  std::uint64_t skipped_files = 0;
  double seconds = 0;

  std::string ToJson() const;
};

// Writes a new repository at `dst` (absent or empty directory) whose commit
// graph mirrors `src` with every tree passed through ConvertTree. Throws
// IoError / CorruptRepoError.
ConversionStats RewriteHistory(const std::filesystem::path& src,
                               const std::filesystem::path& dst,
                               const ConversionConfig& config,
                               std::ostream* log = nullptr);

}  // namespace mgit

#endif  // MGIT_REWRITER_H_
