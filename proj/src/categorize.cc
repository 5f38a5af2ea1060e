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

#include <unordered_set>

#include "mgit/emitter.h"

namespace mgit {
namespace {

const std::unordered_set<std::string_view> kModifiers = {
    "public",   "protected", "private",      "static",    "final",
    "abstract", "native",    "synchronized", "transient", "volatile",
    "strictfp", "default",
};

const std::unordered_set<std::string_view> kPrimitives = {
    "boolean", "byte", "char", "short", "int", "long", "float", "double",
    "void",
};

// Tokens that may start an operand right after a cast's closing paren.
bool StartsOperand(const Token& t) {
  if (t.kind == TokenKind::kIdentifier || t.kind == TokenKind::kLiteral) {
    return true;
  }
  if (t.kind == TokenKind::kKeyword) {
    return t.text == "this" || t.text == "super" || t.text == "new" ||
           t.text == "switch" || kPrimitives.contains(t.text);
  }
  return t.text == "(" || t.text == "!" || t.text == "~";
}

class Categorizer {
 public:
  explicit Categorizer(std::span<const Token> tokens)
      : toks_(tokens.begin(), tokens.end()),
        match_(MatchBrackets(toks_)),
        tags_(toks_.size()) {}

  std::vector<AnnotatedToken> Run(CategorizeContext context) {
    const std::size_t n = toks_.size();
    if (context == CategorizeContext::kStatements) {
      BlockStatements(0, n);
    } else {
      std::size_t i = 0;
      while (i < n) i = Member(i, n);
    }
    std::vector<AnnotatedToken> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::optional<TerminatorCategory> cat = tags_[i];
      if (!cat && IsTerminatorText(toks_[i].text)) {
        cat = toks_[i].text == ";"
                  ? TerminatorCategory::Of(SemicolonTag::kOther)
              : (toks_[i].text == "(" || toks_[i].text == ")")
                  ? TerminatorCategory::Of(ParenTag::kOther)
                  : TerminatorCategory::Of(BracketTag::kPlainBlock);
      }
      out.push_back({toks_[i], cat});
    }
    return out;
  }

 private:
  bool Is(std::size_t i, std::string_view text) const {
    return i < toks_.size() && toks_[i].text == text;
  }
  bool IsIdent(std::size_t i) const {
    return i < toks_.size() && toks_[i].kind == TokenKind::kIdentifier;
  }
  std::size_t Match(std::size_t i) const {
    return i < match_.size() ? match_[i] : i;
  }

  template <typename Tag>
  void Pair(std::size_t open, Tag tag) {
    tags_[open] = TerminatorCategory::Of(tag);
    tags_[match_[open]] = TerminatorCategory::Of(tag);
  }
  template <typename Tag>
  void One(std::size_t i, Tag tag) {
    if (i < tags_.size()) tags_[i] = TerminatorCategory::Of(tag);
  }

  bool IsAnnotationAt(std::size_t i) const {
    return Is(i, "@") && !Is(i + 1, "interface");
  }

  std::size_t Annotation(std::size_t i) {
    ++i;
    while (IsIdent(i) && Is(i + 1, ".")) i += 2;
    if (IsIdent(i)) ++i;
    if (Is(i, "(")) {
      Pair(i, ParenTag::kAnnotationArgs);
      Expr(i + 1, match_[i]);
      i = match_[i] + 1;
    }
    return i;
  }

  // Returns the index after type arguments opened at `i`, or npos.
  std::size_t SkipAngles(std::size_t i, std::size_t end) const {
    int depth = 0;
    for (std::size_t j = i; j < end; ++j) {
      const std::string& t = toks_[j].text;
      if (t == "<") {
        ++depth;
      } else if (t == ">") {
        --depth;
      } else if (t == ">>") {
        depth -= 2;
      } else if (t == ">>>") {
        depth -= 3;
      } else if (t == "(" || t == "[") {
        j = match_[j];
        continue;
      } else if (t == "?" || t == "," || t == "." || t == "&" ||
                 t == "extends" || t == "super" || t == "@" ||
                 toks_[j].kind == TokenKind::kIdentifier ||
                 kPrimitives.contains(t) || t == "]") {
      } else {
        return std::string::npos;
      }
      if (depth <= 0) return j + 1;
    }
    return std::string::npos;
  }

  // Index after a type starting at `i`, or npos if none is there.
  std::size_t TypeEnd(std::size_t i, std::size_t end) const {
    while (IsAnnotationAt(i)) {
      ++i;
      while (IsIdent(i) && Is(i + 1, ".")) i += 2;
      if (!IsIdent(i)) return std::string::npos;
      ++i;
      if (Is(i, "(")) i = match_[i] + 1;
    }
    if (i >= end) return std::string::npos;
    if (toks_[i].kind == TokenKind::kKeyword && kPrimitives.contains(toks_[i].text)) {
      ++i;
    } else if (IsIdent(i)) {
      ++i;
      if (Is(i, "<")) {
        i = SkipAngles(i, end);
        if (i == std::string::npos) return i;
      }
      while (Is(i, ".") && IsIdent(i + 1)) {
        i += 2;
        if (Is(i, "<")) {
          i = SkipAngles(i, end);
          if (i == std::string::npos) return i;
        }
      }
    } else {
      return std::string::npos;
    }
    while (Is(i, "[") && Is(i + 1, "]")) i += 2;
    if (Is(i, "...")) ++i;
    return i;
  }

  std::size_t FindSemicolon(std::size_t i, std::size_t end) const {
    for (; i < end; ++i) {
      if (toks_[i].text == ";") return i;
      if (match_[i] > i) i = match_[i];
    }
    return end;
  }

  bool IsTypeDeclKeyword(std::size_t i) const {
    if (i >= toks_.size()) return false;
    const Token& t = toks_[i];
    if (t.IsKeyword("class") || t.IsKeyword("interface") || t.IsKeyword("enum"))
      return IsIdent(i + 1);
    if (t.text == "@" && Is(i + 1, "interface")) return true;
    return t.IsIdentifier() && t.text == "record" && IsIdent(i + 1) &&
           (Is(i + 2, "(") || Is(i + 2, "<"));
  }

  std::size_t SkipModifiers(std::size_t i, std::size_t end, bool* is_static) {
    while (i < end) {
      const Token& t = toks_[i];
      if (IsAnnotationAt(i)) {
        i = Annotation(i);
      } else if (t.kind == TokenKind::kKeyword && kModifiers.contains(t.text)) {
        if (t.text == "static" && is_static) *is_static = true;
        ++i;
      } else if (t.IsIdentifier() && t.text == "sealed" && IsIdent(i + 1)) {
        ++i;
      } else if (t.IsIdentifier() && t.text == "non" && Is(i + 1, "-") &&
                 Is(i + 2, "sealed")) {
        i += 3;
      } else {
        break;
      }
    }
    return i;
  }

  // A type declaration with its keyword at `i`.
  std::size_t TypeDecl(std::size_t i, std::size_t end) {
    BracketTag tag = BracketTag::kClass;
    bool is_enum = false;
    if (Is(i, "@")) {
      tag = BracketTag::kInterface;
      ++i;
    } else if (Is(i, "interface")) {
      tag = BracketTag::kInterface;
    } else if (Is(i, "enum")) {
      tag = BracketTag::kEnum;
      is_enum = true;
    }
    std::size_t j = i + 2;
    while (j < end && !Is(j, "{")) {
      if (Is(j, "(")) {
        Pair(j, ParenTag::kMethodParams);  // record header
        Expr(j + 1, match_[j]);
        j = match_[j] + 1;
      } else if (IsAnnotationAt(j)) {
        j = Annotation(j);
      } else {
        ++j;
      }
    }
    if (j >= end) return end;
    Pair(j, tag);
    ClassBody(j, match_[j], is_enum);
    return match_[j] + 1;
  }

  void ClassBody(std::size_t open, std::size_t close, bool is_enum) {
    std::size_t i = open + 1;
    if (is_enum) {
      while (i < close && !Is(i, ";")) {
        if (IsAnnotationAt(i)) {
          i = Annotation(i);
        } else if (Is(i, "(")) {
          Pair(i, ParenTag::kConstructorCall);
          Expr(i + 1, match_[i]);
          i = match_[i] + 1;
        } else if (Is(i, "{")) {
          Pair(i, BracketTag::kAnonymousClass);
          ClassBody(i, match_[i], false);
          i = match_[i] + 1;
        } else if (IsIdent(i) || Is(i, ",")) {
          ++i;
        } else {
          break;  // no constant list
        }
      }
      if (Is(i, ";")) {
        One(i, SemicolonTag::kEnumConstantList);
        ++i;
      }
    }
    while (i < close) i = Member(i, close);
  }

  // One class-body member starting at `i`; returns the index after it.
  std::size_t Member(std::size_t i, std::size_t end) {
    if (Is(i, ";")) {
      One(i, SemicolonTag::kEmpty);
      return i + 1;
    }
    bool is_static = false;
    std::size_t j = SkipModifiers(i, end, &is_static);
    if (Is(j, "{")) {
      Pair(j, is_static ? BracketTag::kStaticInit : BracketTag::kInstanceInit);
      BlockStatements(j + 1, match_[j]);
      return match_[j] + 1;
    }
    if (IsTypeDeclKeyword(j)) return TypeDecl(j, end);
    if (Is(j, "<")) {
      const std::size_t after = SkipAngles(j, end);
      if (after != std::string::npos) j = after;
    }
    std::size_t name = j;
    if (!(IsIdent(j) && Is(j + 1, "("))) {
      // Compact canonical constructor: `Name {`.
      if (IsIdent(j) && Is(j + 1, "{")) {
        Pair(j + 1, BracketTag::kMethodBody);
        BlockStatements(j + 2, match_[j + 1]);
        return match_[j + 1] + 1;
      }
      const std::size_t type_end = TypeEnd(j, end);
      if (type_end == std::string::npos) {
        const std::size_t semi = FindSemicolon(j, end);
        Expr(j, semi);
        One(semi, SemicolonTag::kOther);
        return semi + 1;
      }
      name = type_end;
    }
    if (IsIdent(name) && Is(name + 1, "(")) {
      const std::size_t open = name + 1;
      Pair(open, ParenTag::kMethodParams);
      Expr(open + 1, match_[open]);
      std::size_t k = match_[open] + 1;
      while (k < end && !Is(k, "{") && !Is(k, ";")) {
        if (IsAnnotationAt(k)) {
          k = Annotation(k);
        } else if (Is(k, "default")) {
          const std::size_t semi = FindSemicolon(k, end);
          Expr(k + 1, semi);
          k = semi;
        } else {
          k = match_[k] > k ? match_[k] + 1 : k + 1;
        }
      }
      if (Is(k, "{")) {
        Pair(k, BracketTag::kMethodBody);
        BlockStatements(k + 1, match_[k]);
        return match_[k] + 1;
      }
      One(k, SemicolonTag::kAbstractMethod);
      return k + 1;
    }
    // Field declaration.
    const std::size_t semi = FindSemicolon(name, end);
    Expr(name, semi);
    One(semi, SemicolonTag::kField);
    return semi + 1;
  }

  void BlockStatements(std::size_t from, std::size_t to) {
    std::size_t i = from;
    while (i < to) i = Statement(i, to);
  }

  // Braced body gets `tag`; a single unbraced statement keeps its own tags.
  std::size_t SubStatement(std::size_t i, std::size_t to, BracketTag tag) {
    if (i >= to) return to;
    if (Is(i, "{")) {
      Pair(i, tag);
      BlockStatements(i + 1, match_[i]);
      return match_[i] + 1;
    }
    return Statement(i, to);
  }

  std::size_t Terminated(std::size_t i, std::size_t to, SemicolonTag tag) {
    const std::size_t semi = FindSemicolon(i, to);
    Expr(i, semi);
    One(semi, tag);
    return semi + 1;
  }

  bool IsAssignmentOp(std::size_t i) const {
    if (i >= toks_.size() || toks_[i].kind != TokenKind::kOperator) return false;
    const std::string& t = toks_[i].text;
    return t == "=" || (t.size() >= 2 && t.back() == '=' && t != "==" &&
                        t != "!=" && t != "<=" && t != ">=");
  }

  bool LooksLikeLocalVariable(std::size_t i, std::size_t end) const {
    while (i < end && (IsAnnotationAt(i) || Is(i, "final"))) {
      if (Is(i, "final")) {
        ++i;
        continue;
      }
      ++i;
      while (IsIdent(i) && Is(i + 1, ".")) i += 2;
      if (IsIdent(i)) ++i;
      if (Is(i, "(")) i = match_[i] + 1;
    }
    const std::size_t type_end = TypeEnd(i, end);
    if (type_end == std::string::npos || !IsIdent(type_end)) return false;
    const std::size_t after = type_end + 1;
    return Is(after, "=") || Is(after, ";") || Is(after, ",") ||
           Is(after, "[") || Is(after, ":");
  }

  std::size_t Statement(std::size_t i, std::size_t to) {
    const Token& t = toks_[i];
    const std::string& s = t.text;
    if (s == "{") {
      Pair(i, BracketTag::kPlainBlock);
      BlockStatements(i + 1, match_[i]);
      return match_[i] + 1;
    }
    if (s == ";") {
      One(i, SemicolonTag::kEmpty);
      return i + 1;
    }
    if (t.kind == TokenKind::kKeyword) {
      if (s == "if" && Is(i + 1, "(")) {
        Pair(i + 1, ParenTag::kIfCond);
        Expr(i + 2, match_[i + 1]);
        std::size_t j = SubStatement(match_[i + 1] + 1, to, BracketTag::kIf);
        if (Is(j, "else")) {
          if (Is(j + 1, "if")) return Statement(j + 1, to);
          j = SubStatement(j + 1, to, BracketTag::kElse);
        }
        return j;
      }
      if (s == "while" && Is(i + 1, "(")) {
        Pair(i + 1, ParenTag::kWhileCond);
        Expr(i + 2, match_[i + 1]);
        return SubStatement(match_[i + 1] + 1, to, BracketTag::kWhile);
      }
      if (s == "do") {
        std::size_t j = SubStatement(i + 1, to, BracketTag::kDo);
        if (Is(j, "while") && Is(j + 1, "(")) {
          Pair(j + 1, ParenTag::kDoCond);
          Expr(j + 2, match_[j + 1]);
          j = match_[j + 1] + 1;
        }
        if (Is(j, ";")) {
          One(j, SemicolonTag::kDoWhile);
          ++j;
        }
        return j;
      }
      if (s == "for" && Is(i + 1, "(")) return For(i, to);
      if (s == "try") return Try(i, to);
      if (s == "switch" && Is(i + 1, "(")) {
        const std::size_t j = Switch(i);
        if (Is(j, ";")) {  // switch expression used as a statement
          One(j, SemicolonTag::kExpression);
          return j + 1;
        }
        return j;
      }
      if (s == "synchronized" && Is(i + 1, "(")) {
        Pair(i + 1, ParenTag::kSynchronizedExpr);
        Expr(i + 2, match_[i + 1]);
        return SubStatement(match_[i + 1] + 1, to, BracketTag::kSynchronized);
      }
      if (s == "return") return Terminated(i + 1, to, SemicolonTag::kReturn);
      if (s == "break") return Terminated(i + 1, to, SemicolonTag::kBreak);
      if (s == "continue") return Terminated(i + 1, to, SemicolonTag::kContinue);
      if (s == "throw") return Terminated(i + 1, to, SemicolonTag::kThrow);
      if (s == "assert") {
        const std::size_t semi = FindSemicolon(i + 1, to);
        if (Is(i + 1, "(") &&
            (match_[i + 1] + 1 == semi || Is(match_[i + 1] + 1, ":"))) {
          Pair(i + 1, ParenTag::kAssertExpr);
          Expr(i + 2, match_[i + 1]);
          Expr(match_[i + 1] + 1, semi);
        } else {
          Expr(i + 1, semi);
        }
        One(semi, SemicolonTag::kAssert);
        return semi + 1;
      }
    }
    if (t.IsIdentifier() && s == "yield" && i + 1 < to &&
        !IsAssignmentOp(i + 1) && !Is(i + 1, ".") && !Is(i + 1, "[") &&
        !Is(i + 1, "++") && !Is(i + 1, "--") && !Is(i + 1, "(")) {
      return Terminated(i + 1, to, SemicolonTag::kYield);
    }
    if (t.IsIdentifier() && Is(i + 1, ":")) {
      if (Is(i + 2, ";")) {
        One(i + 2, SemicolonTag::kLabeled);
        return i + 3;
      }
      return i + 2 < to ? Statement(i + 2, to) : to;
    }
    // Local class declarations.
    {
      std::size_t j = i;
      while (j < to && (IsAnnotationAt(j) || Is(j, "final") ||
                        Is(j, "abstract") || Is(j, "static") ||
                        Is(j, "strictfp"))) {
        j = IsAnnotationAt(j) ? SkipAnnotationPlain(j) : j + 1;
      }
      if (IsTypeDeclKeyword(j)) {
        while (i < j) {
          if (IsAnnotationAt(i)) {
            i = Annotation(i);
          } else {
            ++i;
          }
        }
        return TypeDecl(j, to);
      }
    }
    const std::size_t semi = FindSemicolon(i, to);
    const bool local = LooksLikeLocalVariable(i, semi);
    Expr(i, semi);
    One(semi, local ? SemicolonTag::kLocalVariable : SemicolonTag::kExpression);
    return semi + 1;
  }

  std::size_t SkipAnnotationPlain(std::size_t i) const {
    ++i;
    while (IsIdent(i) && Is(i + 1, ".")) i += 2;
    if (IsIdent(i)) ++i;
    if (Is(i, "(")) i = match_[i] + 1;
    return i;
  }

  std::size_t For(std::size_t i, std::size_t to) {
    const std::size_t open = i + 1;
    const std::size_t close = match_[open];
    std::vector<std::size_t> semis;
    std::size_t colon = 0;
    for (std::size_t j = open + 1; j < close; ++j) {
      if (toks_[j].text == ";") semis.push_back(j);
      if (toks_[j].text == ":" && colon == 0) colon = j;
      if (match_[j] > j) j = match_[j];
    }
    if (semis.empty() && colon != 0) {
      Pair(open, ParenTag::kEnhancedFor);
      Expr(open + 1, close);
      return SubStatement(close + 1, to, BracketTag::kEnhancedFor);
    }
    Pair(open, ParenTag::kFor);
    std::size_t from = open + 1;
    for (std::size_t k = 0; k < semis.size(); ++k) {
      Expr(from, semis[k]);
      One(semis[k], k == 0 ? SemicolonTag::kForInit : SemicolonTag::kForCond);
      from = semis[k] + 1;
    }
    Expr(from, close);
    return SubStatement(close + 1, to, BracketTag::kFor);
  }

  std::size_t Try(std::size_t i, std::size_t to) {
    std::size_t j = i + 1;
    if (Is(j, "(")) {
      const std::size_t close = match_[j];
      Pair(j, ParenTag::kTryResource);
      std::size_t from = j + 1;
      for (std::size_t k = j + 1; k < close; ++k) {
        if (toks_[k].text == ";") {
          Expr(from, k);
          One(k, SemicolonTag::kLocalVariable);
          from = k + 1;
        } else if (match_[k] > k) {
          k = match_[k];
        }
      }
      Expr(from, close);
      j = close + 1;
    }
    j = SubStatement(j, to, BracketTag::kTry);
    while (Is(j, "catch") && Is(j + 1, "(")) {
      Pair(j + 1, ParenTag::kCatchParam);
      Expr(j + 2, match_[j + 1]);
      j = SubStatement(match_[j + 1] + 1, to, BracketTag::kCatch);
    }
    if (Is(j, "finally")) j = SubStatement(j + 1, to, BracketTag::kFinally);
    return j;
  }

  // `switch (...) { ... }` at `i`; returns the index after the body.
  std::size_t Switch(std::size_t i) {
    Pair(i + 1, ParenTag::kSwitchSelector);
    Expr(i + 2, match_[i + 1]);
    const std::size_t open = match_[i + 1] + 1;
    if (!Is(open, "{")) return open;
    Pair(open, BracketTag::kSwitch);
    SwitchBody(open + 1, match_[open]);
    return match_[open] + 1;
  }

  bool IsSwitchLabel(std::size_t i) const {
    return Is(i, "case") ||
           (Is(i, "default") && (Is(i + 1, ":") || Is(i + 1, "->")));
  }

  void SwitchBody(std::size_t from, std::size_t to) {
    std::size_t i = from;
    while (i < to) {
      if (!IsSwitchLabel(i)) {
        i = Statement(i, to);
        continue;
      }
      std::size_t j = i + 1;
      int ternary = 0;
      while (j < to) {
        const std::string& s = toks_[j].text;
        if (s == "?") ++ternary;
        if (s == "->") break;
        if (s == ":") {
          if (ternary == 0) break;
          --ternary;
        }
        j = match_[j] > j ? match_[j] + 1 : j + 1;
      }
      Expr(i + 1, j);
      if (Is(j, "->")) {
        const std::size_t body = j + 1;
        if (Is(body, "{")) {
          Pair(body, BracketTag::kPlainBlock);
          BlockStatements(body + 1, match_[body]);
          i = match_[body] + 1;
        } else if (Is(body, "throw")) {
          i = Statement(body, to);
        } else {
          i = Terminated(body, to, SemicolonTag::kExpression);
        }
      } else {
        i = j + 1;
      }
    }
  }

  bool IsCastAt(std::size_t open) const {
    const std::size_t close = match_[open];
    if (close + 1 >= toks_.size() || close == open + 1) return false;
    std::size_t k = open + 1;
    bool primitive = toks_[k].kind == TokenKind::kKeyword &&
                     kPrimitives.contains(toks_[k].text);
    std::size_t end = TypeEnd(k, close);
    while (end != std::string::npos && Is(end, "&")) {
      end = TypeEnd(end + 1, close);  // intersection cast
      primitive = false;
    }
    if (end != close) return false;
    if (primitive && !Is(close + 1, "[") && !Is(close + 1, ".")) {
      // `(int)` is never an expression, so only a following delimiter
      // rules the cast out.
      const std::string& t = toks_[close + 1].text;
      return t != ")" && t != ";" && t != "," && t != "{" && t != "}" &&
             t != "?" && t != ":";
    }
    const Token& next = toks_[close + 1];
    if (next.kind == TokenKind::kKeyword && kPrimitives.contains(next.text)) {
      return false;
    }
    return StartsOperand(next) ||
           (Is(close + 2, "->") && next.kind == TokenKind::kIdentifier);
  }

  // Tag for the `(` at `i` when it follows an identifier.
  ParenTag CallTag(std::size_t i, std::size_t from) const {
    // Walk back over a qualified name to see if it is an annotation.
    std::size_t k = i - 1;
    while (k > from && Is(k - 1, ".") && k >= 2 && IsIdent(k - 2)) k -= 2;
    if (k > 0 && Is(k - 1, "@")) return ParenTag::kAnnotationArgs;
    return ParenTag::kMethodCall;
  }

  // `new` at `i`; returns the index after the creation expression.
  std::size_t Creator(std::size_t i, std::size_t to) {
    std::size_t j = i + 1;
    if (Is(j, "<")) {
      const std::size_t after = SkipAngles(j, to);
      if (after != std::string::npos) j = after;
    }
    while (IsAnnotationAt(j)) j = Annotation(j);
    if (j < to && (IsIdent(j) || kPrimitives.contains(toks_[j].text))) {
      ++j;
      if (Is(j, "<")) {
        const std::size_t after = SkipAngles(j, to);
        if (after != std::string::npos) j = after;
      }
      while (Is(j, ".") && IsIdent(j + 1)) {
        j += 2;
        if (Is(j, "<")) {
          const std::size_t after = SkipAngles(j, to);
          if (after != std::string::npos) j = after;
        }
      }
    }
    if (Is(j, "(")) {
      Pair(j, ParenTag::kConstructorCall);
      Expr(j + 1, match_[j]);
      j = match_[j] + 1;
      if (Is(j, "{")) {
        Pair(j, BracketTag::kAnonymousClass);
        ClassBody(j, match_[j], false);
        j = match_[j] + 1;
      }
      return j;
    }
    while (Is(j, "[")) {
      Expr(j + 1, match_[j]);
      j = match_[j] + 1;
    }
    if (Is(j, "{")) {
      ArrayInitializer(j);
      j = match_[j] + 1;
    }
    return j;
  }

  void ArrayInitializer(std::size_t open) {
    Pair(open, BracketTag::kArrayInitializer);
    Expr(open + 1, match_[open]);
  }

  void Expr(std::size_t from, std::size_t to) {
    std::size_t i = from;
    while (i < to) {
      const Token& t = toks_[i];
      const std::string& s = t.text;
      if (t.IsKeyword("new")) {
        i = Creator(i, to);
        continue;
      }
      if (t.IsKeyword("switch") && Is(i + 1, "(")) {
        i = Switch(i);
        continue;
      }
      if (s == "(") {
        const std::size_t close = match_[i];
        ParenTag tag = ParenTag::kGrouping;
        const Token* prev = i > 0 ? &toks_[i - 1] : nullptr;
        if (Is(close + 1, "->")) {
          tag = ParenTag::kLambdaParams;
        } else if (prev && (prev->IsKeyword("super") || prev->IsKeyword("this")) &&
                   !(i >= 2 && Is(i - 2, "."))) {
          tag = ParenTag::kSuperCall;
        } else if (prev && prev->kind == TokenKind::kIdentifier) {
          tag = CallTag(i, from);
        } else if (prev && (prev->IsKeyword("super") || prev->IsKeyword("this"))) {
          tag = ParenTag::kMethodCall;
        } else if (IsCastAt(i)) {
          tag = ParenTag::kCast;
        } else if (Is(close + 1, "[")) {
          tag = ParenTag::kArrayAccessGuard;
        }
        Pair(i, tag);
        Expr(i + 1, close);
        i = close + 1;
        continue;
      }
      if (s == "{") {
        const std::string prev = i > 0 ? toks_[i - 1].text : std::string();
        if (prev == "->") {
          Pair(i, BracketTag::kLambdaBody);
          BlockStatements(i + 1, match_[i]);
        } else if (prev == "=" || prev == "," || prev == "{" || prev == "(" ||
                   prev == "]" || prev == "return" || prev == "?" ||
                   prev == ":") {
          ArrayInitializer(i);
        } else {
          Pair(i, BracketTag::kPlainBlock);
          BlockStatements(i + 1, match_[i]);
        }
        i = match_[i] + 1;
        continue;
      }
      if (s == ";") One(i, SemicolonTag::kOther);
      if (IsAnnotationAt(i)) {
        i = Annotation(i);
        continue;
      }
      if (match_[i] > i) {  // '['
        Expr(i + 1, match_[i]);
        i = match_[i] + 1;
        continue;
      }
      ++i;
    }
  }

  std::vector<Token> toks_;
  std::vector<std::size_t> match_;
  std::vector<std::optional<TerminatorCategory>> tags_;
};

}  // namespace

std::vector<AnnotatedToken> Categorize(std::span<const Token> tokens,
                                       CategorizeContext context) {
  return Categorizer(tokens).Run(context);
}

std::vector<AnnotatedToken> Uncategorized(std::span<const Token> tokens) {
  std::vector<AnnotatedToken> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back({t, std::nullopt});
  return out;
}

}  // namespace mgit
