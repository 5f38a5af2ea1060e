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

#ifndef MGIT_LEXER_H_
#define MGIT_LEXER_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mgit/token.h"

namespace mgit {

// Raised for an unterminated string, character literal, text block or
// comment. Callers treat the file as unconvertible.
class LexError : public std::runtime_error {
 public:
  LexError(const std::string& what, std::size_t offset, int line, int column);

  std::size_t offset() const { return offset_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::size_t offset_;
  int line_;
  int column_;
};

struct Comment {
  enum class Kind { kLine, kBlock, kJavadoc };

  Kind kind = Kind::kLine;
  std::string text;  // verbatim, delimiters included
  std::size_t offset = 0;
  int line = 1;
  int column = 1;
  // Index of the first token after the comment (== tokens.size() at EOF).
  std::size_t next_token = 0;

  std::size_t end_offset() const { return offset + text.size(); }
};

struct LexedSource {
  std::vector<Token> tokens;
  std::vector<Comment> comments;  // all comments, in source order
};

// Tokenizes Java source. Whitespace and comments produce no tokens; comments
// are kept out-of-band so Javadoc can be attached to declarations.
LexedSource Lex(std::string_view source);

// Convenience wrapper returning only the tokens.
std::vector<Token> LexTokens(std::string_view source);

bool IsJavaKeyword(std::string_view word);

}  // namespace mgit

#endif  // MGIT_LEXER_H_
