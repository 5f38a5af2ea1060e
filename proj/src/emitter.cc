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

#include "mgit/emitter.h"

#include <algorithm>

namespace mgit {

std::vector<AnnotatedToken> Elide(std::vector<AnnotatedToken> tokens,
                                  const MethodDecl& decl) {
  std::vector<std::size_t> drop = {decl.params_open, decl.params_close};
  if (decl.body_open) drop.push_back(*decl.body_open);
  if (decl.body_close) drop.push_back(*decl.body_close);
  std::sort(drop.begin(), drop.end(), std::greater<>());
  for (std::size_t index : drop) {
    if (index < tokens.size()) tokens.erase(tokens.begin() + index);
  }
  return tokens;
}

std::string TokenLines(std::span<const AnnotatedToken> tokens) {
  std::string out;
  for (const AnnotatedToken& t : tokens) {
    out += t.token.text;
    if (t.category) {
      out += ' ';
      out += t.category->tag;
    }
    out += '\n';
  }
  return out;
}

namespace {

std::string JavadocHeader(const std::optional<std::string>& block,
                          const RenderConfig& config) {
  if (!config.include_javadoc || !block) return {};
  return *block + "\n";
}

}  // namespace

std::string Render(const MethodDecl& decl, const RenderConfig& config) {
  std::string out = JavadocHeader(decl.javadoc_block, config);
  if (config.line_format == LineFormat::kPlain) return out + decl.source_text;
  std::vector<AnnotatedToken> tokens = config.heuristic1
                                           ? Categorize(decl.body_tokens)
                                           : Uncategorized(decl.body_tokens);
  if (config.heuristic2) tokens = Elide(std::move(tokens), decl);
  return out + TokenLines(tokens);
}

std::string Render(const FieldDecl& decl, const RenderConfig& config) {
  std::string out = JavadocHeader(decl.javadoc_block, config);
  if (config.line_format == LineFormat::kPlain) return out + decl.source_text;
  const std::vector<AnnotatedToken> tokens =
      config.heuristic1 ? Categorize(decl.decl_tokens)
                        : Uncategorized(decl.decl_tokens);
  return out + TokenLines(tokens);
}

}  // namespace mgit
