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

#ifndef MGIT_TOKEN_H_
#define MGIT_TOKEN_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace mgit {

enum class TokenKind : std::uint8_t {
  kIdentifier,
  kKeyword,
  kLiteral,
  kOperator,
  kSeparator,
};

std::string_view TokenKindName(TokenKind kind);

// One lexical unit of Java source. `line` and `column` are 1-based; the
// column counts bytes. `offset` is the byte offset of the first character.
struct Token {
  std::string text;
  TokenKind kind = TokenKind::kIdentifier;
  int line = 1;
  int column = 1;
  std::size_t offset = 0;

  std::size_t byte_len() const { return text.size(); }
  std::size_t end_offset() const { return offset + text.size(); }

  bool Is(std::string_view t) const { return text == t; }
  bool IsIdentifier() const { return kind == TokenKind::kIdentifier; }
  bool IsKeyword(std::string_view k) const {
    return kind == TokenKind::kKeyword && text == k;
  }

  friend bool operator==(const Token&, const Token&) = default;
};

}  // namespace mgit

#endif  // MGIT_TOKEN_H_
