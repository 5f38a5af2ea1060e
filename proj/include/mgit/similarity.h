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

#ifndef MGIT_SIMILARITY_H_
#define MGIT_SIMILARITY_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mgit {

// Exact non-negative rational kept unreduced, so 8/10 stays 8/10 for
// display; comparisons are by value.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  }
  std::string ToString() const;

  // True iff num/den >= percent/100.
  bool AtLeastPercent(int percent) const {
    return static_cast<unsigned __int128>(num) * 100 >=
           static_cast<unsigned __int128>(percent) * den;
  }

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return static_cast<unsigned __int128>(a.num) * b.den ==
           static_cast<unsigned __int128>(b.num) * a.den;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    return static_cast<unsigned __int128>(a.num) * b.den <=>
           static_cast<unsigned __int128>(b.num) * a.den;
  }
};

// 64-bit FNV-1a.
std::uint64_t HashBytes(std::string_view bytes);

struct Chunk {
  std::uint64_t hash = 0;
  std::uint32_t byte_len = 0;

  friend auto operator<=>(const Chunk&, const Chunk&) = default;
};

// Line fingerprint of a file. Lines are split after each LF (the LF belongs
// to its line); a trailing unterminated line counts. Lines longer than 64
// bytes are cut into 64-byte chunks. Both multisets are kept sorted.
struct Fingerprint {
  std::vector<Chunk> chunks;
  std::vector<std::uint64_t> line_hashes;
  std::uint64_t total_bytes = 0;

  std::size_t line_count() const { return line_hashes.size(); }
};

inline constexpr std::size_t kChunkBytes = 64;

Fingerprint MakeFingerprint(std::string_view content);

enum class SimilarityMetric {
  // Shared chunk bytes over the larger file's byte count.
  kGitBytes,
  // Shared lines over the larger file's line count.
  kLines,
};

// Symmetric; two empty files score 1.
Ratio Similarity(const Fingerprint& a, const Fingerprint& b,
                 SimilarityMetric metric);

}  // namespace mgit

#endif  // MGIT_SIMILARITY_H_
