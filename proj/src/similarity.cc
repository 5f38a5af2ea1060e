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

#include "mgit/similarity.h"

#include <algorithm>

namespace mgit {

std::string Ratio::ToString() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

std::uint64_t HashBytes(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Fingerprint MakeFingerprint(std::string_view content) {
  Fingerprint fp;
  fp.total_bytes = content.size();
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t nl = content.find('\n', pos);
    const std::size_t end = nl == std::string_view::npos ? content.size() : nl + 1;
    const std::string_view line = content.substr(pos, end - pos);
    fp.line_hashes.push_back(HashBytes(line));
    for (std::size_t off = 0; off < line.size(); off += kChunkBytes) {
      const std::string_view chunk = line.substr(off, kChunkBytes);
      fp.chunks.push_back(
          {HashBytes(chunk), static_cast<std::uint32_t>(chunk.size())});
    }
    pos = end;
  }
  std::sort(fp.chunks.begin(), fp.chunks.end());
  std::sort(fp.line_hashes.begin(), fp.line_hashes.end());
  return fp;
}

namespace {

// Sum of weight(x) over the multiset intersection of two sorted ranges.
template <typename T, typename Weight>
std::uint64_t IntersectionWeight(const std::vector<T>& a,
                                 const std::vector<T>& b, Weight weight) {
  std::uint64_t total = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      total += weight(*ia);
      ++ia;
      ++ib;
    }
  }
  return total;
}

}  // namespace

Ratio Similarity(const Fingerprint& a, const Fingerprint& b,
                 SimilarityMetric metric) {
  if (metric == SimilarityMetric::kGitBytes) {
    const std::uint64_t den = std::max(a.total_bytes, b.total_bytes);
    if (den == 0) return {1, 1};
    return {IntersectionWeight(a.chunks, b.chunks,
                               [](const Chunk& c) { return c.byte_len; }),
            den};
  }
  const std::uint64_t den = std::max(a.line_count(), b.line_count());
  if (den == 0) return {1, 1};
  return {IntersectionWeight(a.line_hashes, b.line_hashes,
                             [](std::uint64_t) { return 1; }),
          den};
}

}  // namespace mgit
