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

#ifndef MGIT_TERMINATOR_CATEGORY_H_
#define MGIT_TERMINATOR_CATEGORY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace mgit {

// Roles a `;` can play.
enum class SemicolonTag : std::uint8_t {
  kReturn,
  kExpression,
  kLocalVariable,
  kBreak,
  kContinue,
  kThrow,
  kAssert,
  kDoWhile,
  kForInit,
  kForCond,
  kForUpdate,
  kEmpty,
  kField,
  kAbstractMethod,
  kEnumConstantList,
  kYield,
  kLabeled,
  kOther,
};

// Roles a `{` or `}` can play.
enum class BracketTag : std::uint8_t {
  kMethodBody,
  kIf,
  kElse,
  kFor,
  kEnhancedFor,
  kWhile,
  kDo,
  kTry,
  kCatch,
  kFinally,
  kSwitch,
  kSynchronized,
  kStaticInit,
  kInstanceInit,
  kArrayInitializer,
  kLambdaBody,
  kAnonymousClass,
  kClass,
  kEnum,
  kInterface,
  kPlainBlock,
};

// Roles a `(` or `)` can play.
enum class ParenTag : std::uint8_t {
  kMethodParams,
  kMethodCall,
  kConstructorCall,
  kIfCond,
  kWhileCond,
  kDoCond,
  kFor,
  kEnhancedFor,
  kSwitchSelector,
  kCatchParam,
  kCast,
  kGrouping,
  kSynchronizedExpr,
  kAnnotationArgs,
  kLambdaParams,
  kTryResource,
  kAssertExpr,
  kArrayAccessGuard,
  kSuperCall,
  kOther,
};

std::span<const std::string_view> SemicolonTagNames();
std::span<const std::string_view> BracketTagNames();
std::span<const std::string_view> ParenTagNames();

std::string_view TagName(SemicolonTag tag);
std::string_view TagName(BracketTag tag);
std::string_view TagName(ParenTag tag);

// A terminator's class plus its role; `tag` is the uppercase spelling.
struct TerminatorCategory {
  enum class TokenClass : std::uint8_t { kSemicolon, kBracket, kParen };

  TokenClass token_class = TokenClass::kSemicolon;
  std::string_view tag;

  static TerminatorCategory Of(SemicolonTag t) {
    return {TokenClass::kSemicolon, TagName(t)};
  }
  static TerminatorCategory Of(BracketTag t) {
    return {TokenClass::kBracket, TagName(t)};
  }
  static TerminatorCategory Of(ParenTag t) {
    return {TokenClass::kParen, TagName(t)};
  }

  friend bool operator==(const TerminatorCategory&,
                         const TerminatorCategory&) = default;
};

// ";" "{" "}" "(" ")" are terminators; everything else is left untagged.
bool IsTerminatorText(std::string_view text);

}  // namespace mgit

#endif  // MGIT_TERMINATOR_CATEGORY_H_
