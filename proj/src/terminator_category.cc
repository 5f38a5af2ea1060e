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

#include "mgit/terminator_category.h"

#include <array>

namespace mgit {
namespace {

constexpr std::array<std::string_view, 18> kSemicolonNames = {
    "RETURN",     "EXPRESSION", "LOCAL_VARIABLE",  "BREAK",
    "CONTINUE",   "THROW",      "ASSERT",          "DO_WHILE",
    "FOR_INIT",   "FOR_COND",   "FOR_UPDATE",      "EMPTY",
    "FIELD",      "ABSTRACT_METHOD", "ENUM_CONSTANT_LIST", "YIELD",
    "LABELED",    "OTHER",
};

constexpr std::array<std::string_view, 21> kBracketNames = {
    "METHOD_BODY",  "IF",           "ELSE",          "FOR",
    "ENHANCED_FOR", "WHILE",        "DO",            "TRY",
    "CATCH",        "FINALLY",      "SWITCH",        "SYNCHRONIZED",
    "STATIC_INIT",  "INSTANCE_INIT", "ARRAY_INITIALIZER", "LAMBDA_BODY",
    "ANONYMOUS_CLASS", "CLASS",     "ENUM",          "INTERFACE",
    "PLAIN_BLOCK",
};

constexpr std::array<std::string_view, 20> kParenNames = {
    "METHOD_PARAMS",  "METHOD_CALL",  "CONSTRUCTOR_CALL", "IF_COND",
    "WHILE_COND",     "DO_COND",      "FOR",              "ENHANCED_FOR",
    "SWITCH_SELECTOR", "CATCH_PARAM", "CAST",             "GROUPING",
    "SYNCHRONIZED_EXPR", "ANNOTATION_ARGS", "LAMBDA_PARAMS", "TRY_RESOURCE",
    "ASSERT_EXPR",    "ARRAY_ACCESS_GUARD", "SUPER_CALL",  "OTHER",
};

}  // namespace

std::span<const std::string_view> SemicolonTagNames() { return kSemicolonNames; }
std::span<const std::string_view> BracketTagNames() { return kBracketNames; }
std::span<const std::string_view> ParenTagNames() { return kParenNames; }

std::string_view TagName(SemicolonTag tag) {
  return kSemicolonNames[static_cast<std::size_t>(tag)];
}
std::string_view TagName(BracketTag tag) {
  return kBracketNames[static_cast<std::size_t>(tag)];
}
std::string_view TagName(ParenTag tag) {
  return kParenNames[static_cast<std::size_t>(tag)];
}

bool IsTerminatorText(std::string_view text) {
  return text == ";" || text == "{" || text == "}" || text == "(" ||
         text == ")";
}

}  // namespace mgit
