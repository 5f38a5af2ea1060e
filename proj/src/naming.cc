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

#include "mgit/naming.h"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <stdexcept>

namespace mgit {

void NamePolicy::Validate() const {
  if (max_file_name_bytes < 32) {
    throw std::invalid_argument("max file name bytes must be at least 32");
  }
}

namespace {

std::string Join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// "<chain>#<mods>_<type>_" with empty segments omitted.
std::string Prefix(const std::vector<std::string>& chain,
                   const std::vector<std::string>& mods,
                   const std::string& type) {
  std::string out = Join(chain, "$") + "#";
  if (!mods.empty()) out += Join(mods, "_") + "_";
  if (!type.empty()) out += type + "_";
  return out;
}

std::string Sha256Hex8(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(),
             nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (int i = 0; i < 4; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

std::string WithDirectory(std::string_view directory, std::string name) {
  if (directory.empty()) return name;
  std::string out(directory);
  if (out.back() != '/') out += '/';
  return out + name;
}

std::size_t EffectiveLimit(std::string_view directory,
                           const NamePolicy& policy) {
  std::size_t limit = policy.max_file_name_bytes;
  if (policy.max_path_bytes) {
    const std::size_t dir = directory.empty() ? 0 : directory.size() + 1;
    const std::size_t room =
        *policy.max_path_bytes > dir ? *policy.max_path_bytes - dir : 0;
    limit = std::min(limit, std::max<std::size_t>(room, 32));
  }
  return limit;
}

}  // namespace

std::string MethodBaseName(const MethodDecl& decl) {
  return Prefix(decl.class_chain, decl.modifiers, decl.return_type) +
         decl.name + "(" + Join(decl.param_types, ",") + ")";
}

std::string FieldBaseName(const FieldDecl& decl) {
  return Prefix(decl.class_chain, decl.modifiers, decl.field_type) + decl.name;
}

std::string Shorten(std::string_view base, std::string_view extension,
                    const NamePolicy& policy) {
  policy.Validate();
  if (base.size() + extension.size() <= policy.max_file_name_bytes) {
    return std::string(base);
  }
  std::size_t keep = policy.max_file_name_bytes - extension.size() - 9;
  // Do not split a UTF-8 sequence: back up over continuation bytes.
  while (keep > 0 &&
         (static_cast<unsigned char>(base[keep]) & 0xC0) == 0x80) {
    --keep;
  }
  return std::string(base.substr(0, keep)) + "_" + Sha256Hex8(base);
}

std::string MethodFileName(const MethodDecl& decl, std::string_view directory,
                           const NamePolicy& policy) {
  NamePolicy effective = policy;
  effective.max_file_name_bytes = EffectiveLimit(directory, policy);
  return WithDirectory(
      directory, Shorten(MethodBaseName(decl), kMethodExtension, effective) +
                     std::string(kMethodExtension));
}

std::string FieldFileName(const FieldDecl& decl, std::string_view directory,
                          const NamePolicy& policy) {
  NamePolicy effective = policy;
  effective.max_file_name_bytes = EffectiveLimit(directory, policy);
  return WithDirectory(
      directory, Shorten(FieldBaseName(decl), kFieldExtension, effective) +
                     std::string(kFieldExtension));
}

}  // namespace mgit
