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

#ifndef MGIT_NAMING_H_
#define MGIT_NAMING_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "mgit/java_model.h"

namespace mgit {

inline constexpr std::string_view kMethodExtension = ".mjava";
inline constexpr std::string_view kFieldExtension = ".fjava";

// Length limits for generated file names, in bytes.
struct NamePolicy {
  std::size_t max_file_name_bytes = 255;
  // Bound on the whole relative path; 260 mimics Windows limits.
  std::optional<std::size_t> max_path_bytes;

  // Throws std::invalid_argument if max_file_name_bytes < 32.
  void Validate() const;
};

// `Outer$Inner#mods_ret_name(p1,p2)` (no extension, not shortened).
std::string MethodBaseName(const MethodDecl& decl);
// `Outer#mods_type_name`.
std::string FieldBaseName(const FieldDecl& decl);

// Returns `base` unchanged when `base + extension` fits the limit; otherwise
// a UTF-8-safe prefix followed by '_' and 8 hex digits of SHA-256(base).
std::string Shorten(std::string_view base, std::string_view extension,
                    const NamePolicy& policy);

// Relative path `<directory>/<shortened base><ext>`; `directory` may be
// empty for the repository root.
std::string MethodFileName(const MethodDecl& decl, std::string_view directory,
                           const NamePolicy& policy);
std::string FieldFileName(const FieldDecl& decl, std::string_view directory,
                          const NamePolicy& policy);

}  // namespace mgit

#endif  // MGIT_NAMING_H_
