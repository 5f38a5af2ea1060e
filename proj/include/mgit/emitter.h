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

#ifndef MGIT_EMITTER_H_
#define MGIT_EMITTER_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mgit/java_model.h"
#include "mgit/terminator_category.h"
#include "mgit/token.h"

namespace mgit {

enum class LineFormat {
  kTokenPerLine,
  // Original source lines of the declaration (line-preserving conversion).
  kPlain,
};

// heuristic1/heuristic2 have no effect in kPlain.
struct RenderConfig {
  LineFormat line_format = LineFormat::kTokenPerLine;
  bool heuristic1 = true;
  bool heuristic2 = true;
  bool include_javadoc = true;

  friend bool operator==(const RenderConfig&, const RenderConfig&) = default;
};

struct AnnotatedToken {
  Token token;
  std::optional<TerminatorCategory> category;
};

enum class CategorizeContext {
  // A single method or field declaration, as held by MethodDecl/FieldDecl.
  kMemberDeclaration,
  // A sequence of block statements.
  kStatements,
};

// Pairs every `;` `{` `}` `(` `)` with the role of its innermost enclosing
// construct. Input must be bracket-balanced.
std::vector<AnnotatedToken> Categorize(
    std::span<const Token> tokens,
    CategorizeContext context = CategorizeContext::kMemberDeclaration);

// Untagged view of `tokens`.
std::vector<AnnotatedToken> Uncategorized(std::span<const Token> tokens);

// Drops the parameter-list parens and the outermost body braces of `decl`.
// `tokens` must be aligned with decl.body_tokens.
std::vector<AnnotatedToken> Elide(std::vector<AnnotatedToken> tokens,
                                  const MethodDecl& decl);

// One line per token; tagged terminators are written as "<text> <TAG>".
std::string TokenLines(std::span<const AnnotatedToken> tokens);

std::string Render(const MethodDecl& decl, const RenderConfig& config);
std::string Render(const FieldDecl& decl, const RenderConfig& config);

struct RenderedFile {
  std::string relative_path;
  std::string content;

  friend bool operator==(const RenderedFile&, const RenderedFile&) = default;
};

}  // namespace mgit

#endif  // MGIT_EMITTER_H_
