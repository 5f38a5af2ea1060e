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

#ifndef MGIT_JAVA_MODEL_H_
#define MGIT_JAVA_MODEL_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mgit/lexer.h"
#include "mgit/token.h"

namespace mgit {

// Brace/paren structure that cannot be matched, or a declaration header the
// structural parser does not understand.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset, int line,
             int column);

  std::size_t offset() const { return offset_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::size_t offset_;
  int line_;
  int column_;
};

// A method or constructor. `body_tokens` starts at the first annotation or
// modifier of the declaration and ends at the closing `}` (or the `;` of a
// body-less method).
struct MethodDecl {
  std::vector<std::string> class_chain;  // outermost first
  std::vector<std::string> modifiers;    // keywords only, annotations excluded
  std::optional<std::string> type_params;
  std::string return_type;  // empty for constructors
  std::string name;
  std::vector<std::string> param_types;
  std::vector<Token> body_tokens;
  std::optional<std::string> javadoc;
  bool is_abstract = false;

  // Indices into body_tokens of the parameter-list parens and the outermost
  // body braces. The braces are absent for body-less methods.
  std::size_t params_open = 0;
  std::size_t params_close = 0;
  std::optional<std::size_t> body_open;
  std::optional<std::size_t> body_close;

  // Original source lines of the declaration with non-Javadoc comments
  // removed; used for line-preserving output.
  std::string source_text;
  // Javadoc as it appeared in the file, preceded by the indentation of its
  // first line.
  std::optional<std::string> javadoc_block;

  bool IsConstructor() const { return return_type.empty(); }
};

// One declared field variable; `int a, b;` yields two of these.
struct FieldDecl {
  std::vector<std::string> class_chain;
  std::vector<std::string> modifiers;
  std::string field_type;
  std::string name;
  // Annotations, modifiers and type, then this variable's declarator and
  // initializer, then the terminating `;`.
  std::vector<Token> decl_tokens;
  std::optional<std::string> javadoc;

  std::string source_text;
  std::optional<std::string> javadoc_block;
};

struct ExtractedDecls {
  std::vector<MethodDecl> methods;
  std::vector<FieldDecl> fields;
};

// Lexes and extracts. Throws LexError or ParseError.
ExtractedDecls Extract(std::string_view source);

// Extraction over an already-lexed file.
ExtractedDecls Extract(std::string_view source, const LexedSource& lexed);

// Indices of matching (), {}, [] pairs; match[i] == i for non-brackets.
// Throws ParseError on imbalance.
std::vector<std::size_t> MatchBrackets(const std::vector<Token>& tokens);

}  // namespace mgit

#endif  // MGIT_JAVA_MODEL_H_
