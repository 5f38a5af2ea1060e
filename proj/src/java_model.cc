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

#include "mgit/java_model.h"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace mgit {

ParseError::ParseError(const std::string& what, std::size_t offset, int line,
                       int column)
    : std::runtime_error(what + " at " + std::to_string(line) + ":" +
                         std::to_string(column)),
      offset_(offset),
      line_(line),
      column_(column) {}

std::vector<std::size_t> MatchBrackets(const std::vector<Token>& tokens) {
  std::vector<std::size_t> match(tokens.size());
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    match[i] = i;
    const Token& t = tokens[i];
    if (t.kind != TokenKind::kSeparator || t.text.size() != 1) continue;
    const char c = t.text[0];
    if (c == '(' || c == '[' || c == '{') {
      stack.push_back(i);
    } else if (c == ')' || c == ']' || c == '}') {
      const char want = c == ')' ? '(' : c == ']' ? '[' : '{';
      if (stack.empty() || tokens[stack.back()].text[0] != want) {
        throw ParseError(std::string("unbalanced '") + c + "'", t.offset,
                         t.line, t.column);
      }
      match[i] = stack.back();
      match[stack.back()] = i;
      stack.pop_back();
    }
  }
  if (!stack.empty()) {
    const Token& t = tokens[stack.back()];
    throw ParseError("unclosed '" + t.text + "'", t.offset, t.line, t.column);
  }
  return match;
}

namespace {

const std::unordered_set<std::string_view> kModifierKeywords = {
    "public",   "protected",    "private",   "static",   "final",
    "abstract", "native",       "synchronized", "transient", "volatile",
    "strictfp", "default",
};

const std::unordered_set<std::string_view> kPrimitiveTypes = {
    "boolean", "byte", "char", "short", "int", "long", "float", "double",
    "void",
};

bool IsWhitespace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\f';
}

std::string RStrip(std::string_view s) {
  std::size_t n = s.size();
  while (n > 0 && IsWhitespace(s[n - 1])) --n;
  return std::string(s.substr(0, n));
}

enum class TypeKind { kClass, kInterface, kEnum, kRecord, kAnnotation };

class Parser {
 public:
  Parser(std::string_view source, const LexedSource& lexed)
      : src_(source), toks_(lexed.tokens), comments_(lexed.comments) {}

  ExtractedDecls Run() {
    match_ = MatchBrackets(toks_);
    for (std::size_t c = 0; c < comments_.size(); ++c) {
      if (comments_[c].kind == Comment::Kind::kJavadoc) {
        javadoc_before_[comments_[c].next_token] = c;
      }
    }
    CompilationUnit();
    return std::move(out_);
  }

 private:
  const Token& At(std::size_t i) const {
    if (i >= toks_.size()) {
      const Token& last = toks_.empty() ? eof_ : toks_.back();
      throw ParseError("unexpected end of file", last.end_offset(), last.line,
                       last.column);
    }
    return toks_[i];
  }

  bool Is(std::size_t i, std::string_view text) const {
    return i < toks_.size() && toks_[i].text == text;
  }

  bool IsIdent(std::size_t i) const {
    return i < toks_.size() && toks_[i].kind == TokenKind::kIdentifier;
  }

  [[noreturn]] void Fail(std::size_t i, const std::string& what) const {
    const Token& t = i < toks_.size() ? toks_[i]
                     : toks_.empty()  ? eof_
                                      : toks_.back();
    throw ParseError(what, t.offset, t.line, t.column);
  }

  void CompilationUnit() {
    std::size_t i = 0;
    while (i < toks_.size()) {
      if (Is(i, ";")) {
        ++i;
      } else if (Is(i, "package") || Is(i, "import")) {
        i = FindAtDepth(i, toks_.size(), ";") + 1;
      } else if (IsIdent(i) && (Is(i, "module") || Is(i, "open"))) {
        return;  // module-info.java has no methods
      } else {
        std::vector<std::string> ignored;
        const std::size_t decl = SkipModifiers(i, &ignored);
        if (!IsTypeDeclStart(decl)) Fail(decl, "expected a type declaration");
        i = TypeDecl(decl, {});
      }
    }
  }

  // First index in [from, to) whose text is `text`, skipping nested brackets.
  std::size_t FindAtDepth(std::size_t from, std::size_t to,
                          std::string_view text) const {
    for (std::size_t i = from; i < to; ++i) {
      if (toks_[i].text == text) return i;
      if (match_[i] > i) i = match_[i];
    }
    Fail(from, "expected '" + std::string(text) + "'");
  }

  std::size_t SkipAnnotation(std::size_t i) const {
    ++i;  // '@'
    if (!IsIdent(i)) Fail(i, "expected annotation name");
    ++i;
    while (Is(i, ".") && IsIdent(i + 1)) i += 2;
    if (Is(i, "(")) i = match_[i] + 1;
    return i;
  }

  bool IsAnnotationAt(std::size_t i) const {
    return Is(i, "@") && !Is(i + 1, "interface");
  }

  std::size_t SkipModifiers(std::size_t i,
                            std::vector<std::string>* mods) const {
    while (i < toks_.size()) {
      const Token& t = toks_[i];
      if (IsAnnotationAt(i)) {
        i = SkipAnnotation(i);
      } else if (t.kind == TokenKind::kKeyword &&
                 kModifierKeywords.contains(t.text)) {
        mods->push_back(t.text);
        ++i;
      } else if (t.IsIdentifier() && t.text == "sealed" && IsIdent(i + 1)) {
        mods->push_back(t.text);
        ++i;
      } else if (t.IsIdentifier() && t.text == "non" && Is(i + 1, "-") &&
                 Is(i + 2, "sealed")) {
        mods->push_back("non-sealed");
        i += 3;
      } else {
        break;
      }
    }
    return i;
  }

  bool IsTypeDeclStart(std::size_t i) const {
    if (i >= toks_.size()) return false;
    const Token& t = toks_[i];
    if (t.IsKeyword("class") || t.IsKeyword("interface") || t.IsKeyword("enum"))
      return true;
    if (t.text == "@" && Is(i + 1, "interface")) return true;
    return t.IsIdentifier() && t.text == "record" && IsIdent(i + 1) &&
           (Is(i + 2, "(") || Is(i + 2, "<"));
  }

  // Parses a type declaration whose keyword is at `i`; returns the index
  // after its closing brace.
  std::size_t TypeDecl(std::size_t i, std::vector<std::string> chain) {
    TypeKind kind = TypeKind::kClass;
    if (Is(i, "@")) {
      kind = TypeKind::kAnnotation;
      ++i;
    } else if (Is(i, "interface")) {
      kind = TypeKind::kInterface;
    } else if (Is(i, "enum")) {
      kind = TypeKind::kEnum;
    } else if (Is(i, "record")) {
      kind = TypeKind::kRecord;
    }
    ++i;
    if (!IsIdent(i)) Fail(i, "expected type name");
    chain.push_back(toks_[i].text);
    std::size_t j = i + 1;
    while (j < toks_.size() && !Is(j, "{")) {
      if (Is(j, ";") || Is(j, "}")) Fail(j, "expected class body");
      j = match_[j] > j ? match_[j] + 1 : j + 1;
    }
    if (j >= toks_.size()) Fail(i, "expected class body");
    ClassBody(j, match_[j], chain, kind);
    return match_[j] + 1;
  }

  std::size_t SkipAngles(std::size_t i) const {
    int depth = 0;
    for (std::size_t j = i; j < toks_.size(); ++j) {
      const std::string& t = toks_[j].text;
      if (t == "<") {
        ++depth;
      } else if (t == ">") {
        depth -= 1;
      } else if (t == ">>") {
        depth -= 2;
      } else if (t == ">>>") {
        depth -= 3;
      } else if (t == "(" || t == "[") {
        j = match_[j];
      } else if (t == ";" || t == "{" || t == "}" || t == ")" || t == "=") {
        break;
      }
      if (depth <= 0) return j + 1;
    }
    Fail(i, "unterminated type arguments");
  }

  // Returns the index after a type (annotations, qualified name, type
  // arguments, array dimensions, varargs ellipsis).
  std::size_t Type(std::size_t i) const {
    while (IsAnnotationAt(i)) i = SkipAnnotation(i);
    const Token& t = At(i);
    if (t.kind == TokenKind::kKeyword && kPrimitiveTypes.contains(t.text)) {
      ++i;
    } else if (t.IsIdentifier()) {
      ++i;
      if (Is(i, "<")) i = SkipAngles(i);
      while (Is(i, ".") && (IsIdent(i + 1) || Is(i + 1, "@"))) {
        ++i;
        while (IsAnnotationAt(i)) i = SkipAnnotation(i);
        if (!IsIdent(i)) Fail(i, "expected type name");
        ++i;
        if (Is(i, "<")) i = SkipAngles(i);
      }
    } else {
      Fail(i, "expected a type");
    }
    while (true) {
      std::size_t j = i;
      while (IsAnnotationAt(j)) j = SkipAnnotation(j);
      if (Is(j, "[") && Is(j + 1, "]")) {
        i = j + 2;
      } else {
        break;
      }
    }
    if (Is(i, "...")) ++i;
    return i;
  }

  // Concatenated token text with annotations dropped. Types used in names
  // carry no whitespace at all; `spaced` keeps one between adjacent words.
  std::string TypeText(std::size_t from, std::size_t to,
                       bool spaced = false) const {
    std::string out;
    bool prev_word = false;
    for (std::size_t i = from; i < to;) {
      if (IsAnnotationAt(i)) {
        i = SkipAnnotation(i);
        continue;
      }
      const bool word = toks_[i].kind == TokenKind::kIdentifier ||
                        toks_[i].kind == TokenKind::kKeyword;
      if (spaced && word && prev_word) out += ' ';
      out += toks_[i].text;
      prev_word = word;
      ++i;
    }
    return out;
  }

  std::vector<std::string> ParamTypes(std::size_t open, std::size_t close) const {
    std::vector<std::string> types;
    std::size_t i = open + 1;
    while (i < close) {
      std::vector<std::string> ignored;
      i = SkipModifiers(i, &ignored);
      const std::size_t type_end = Type(i);
      std::string type = TypeText(i, type_end);
      std::size_t j = type_end;
      bool receiver = false;
      if (Is(j, "this")) {
        receiver = true;
        ++j;
      } else if (IsIdent(j) && Is(j + 1, ".") && Is(j + 2, "this")) {
        receiver = true;
        j += 3;
      } else if (IsIdent(j)) {
        ++j;
        while (Is(j, "[") && Is(j + 1, "]")) {
          type += "[]";
          j += 2;
        }
      } else {
        Fail(j, "expected parameter name");
      }
      if (!receiver) types.push_back(std::move(type));
      if (Is(j, ",")) {
        ++j;
      } else if (j != close) {
        Fail(j, "unexpected token in parameter list");
      }
      i = j;
    }
    return types;
  }

  std::optional<std::size_t> JavadocFor(std::size_t start) const {
    auto it = javadoc_before_.find(start);
    if (it == javadoc_before_.end()) return std::nullopt;
    return it->second;
  }

  std::string JavadocBlock(const Comment& c) const {
    std::size_t line_begin = c.offset;
    while (line_begin > 0 && src_[line_begin - 1] != '\n') --line_begin;
    std::string_view prefix = src_.substr(line_begin, c.offset - line_begin);
    const bool blank = std::all_of(prefix.begin(), prefix.end(), IsWhitespace);
    return (blank ? std::string(prefix) : std::string()) + c.text;
  }

  // Original lines spanning tokens [first, last] with comments other than
  // Javadoc removed. Lines left empty by comment removal are dropped.
  std::string SourceLines(std::size_t first, std::size_t last) const {
    std::size_t begin = toks_[first].offset;
    std::size_t line_begin = begin;
    while (line_begin > 0 && src_[line_begin - 1] != '\n') --line_begin;
    std::string_view prefix = src_.substr(line_begin, begin - line_begin);
    if (std::all_of(prefix.begin(), prefix.end(), IsWhitespace)) {
      begin = line_begin;
    }
    const std::size_t end = toks_[last].end_offset();

    std::vector<std::pair<std::string, bool>> lines(1);  // text, touched
    std::size_t pos = begin;
    auto comment = std::lower_bound(
        comments_.begin(), comments_.end(), begin,
        [](const Comment& c, std::size_t off) { return c.offset < off; });
    while (pos < end) {
      if (comment != comments_.end() && comment->offset == pos) {
        if (comment->kind == Comment::Kind::kJavadoc) {
          for (char ch : comment->text) {
            if (ch == '\n') {
              lines.emplace_back();
            } else {
              lines.back().first += ch;
            }
          }
        } else {
          lines.back().second = true;
          // A block comment spanning lines still ends the current line.
          for (char ch : comment->text) {
            if (ch == '\n') {
              lines.emplace_back();
              lines.back().second = true;
            }
          }
        }
        pos = comment->end_offset();
        ++comment;
        continue;
      }
      if (comment != comments_.end() && comment->offset < pos) {
        ++comment;
        continue;
      }
      if (src_[pos] == '\n') {
        lines.emplace_back();
      } else {
        lines.back().first += src_[pos];
      }
      ++pos;
    }
    std::string out;
    for (auto& [text, touched] : lines) {
      if (touched) {
        std::string stripped = RStrip(text);
        if (std::all_of(stripped.begin(), stripped.end(), IsWhitespace)) {
          continue;
        }
        out += stripped;
      } else {
        out += text;
      }
      out += '\n';
    }
    return out;
  }

  void EnumConstants(std::size_t& i, std::size_t close,
                     const std::vector<std::string>& chain) {
    while (i < close) {
      if (Is(i, ";")) {
        ++i;
        return;
      }
      if (Is(i, ",")) {
        ++i;
        continue;
      }
      while (IsAnnotationAt(i)) i = SkipAnnotation(i);
      if (!IsIdent(i)) {
        // Members without a constant list (or after a trailing comma).
        return;
      }
      ++i;
      if (Is(i, "(")) {
        ScanCode(i + 1, match_[i], chain);
        i = match_[i] + 1;
      }
      if (Is(i, "{")) {
        AnonymousBody(i, chain);
        i = match_[i] + 1;
      }
      if (!Is(i, ",") && !Is(i, ";") && i != close) {
        Fail(i, "unexpected token in enum constant list");
      }
    }
  }

  void AnonymousBody(std::size_t open, std::vector<std::string> chain) {
    chain.push_back("$" + std::to_string(++anonymous_count_));
    ClassBody(open, match_[open], chain, TypeKind::kClass);
  }

  void ClassBody(std::size_t open, std::size_t close,
                 const std::vector<std::string>& chain, TypeKind kind) {
    std::size_t i = open + 1;
    if (kind == TypeKind::kEnum) EnumConstants(i, close, chain);
    while (i < close) {
      if (Is(i, ";")) {
        ++i;
        continue;
      }
      const std::size_t start = i;
      std::vector<std::string> mods;
      i = SkipModifiers(i, &mods);
      if (Is(i, "{")) {
        ScanCode(i + 1, match_[i], chain);  // initializer block
        i = match_[i] + 1;
        continue;
      }
      if (IsTypeDeclStart(i)) {
        i = TypeDecl(i, chain);
        continue;
      }
      std::optional<std::string> type_params;
      if (Is(i, "<")) {
        const std::size_t end = SkipAngles(i);
        type_params = TypeText(i, end, /*spaced=*/true);
        i = end;
      }
      if (IsIdent(i) && Is(i + 1, "(") && toks_[i].text == chain.back()) {
        i = Method(start, i, i, std::move(mods), std::move(type_params), chain);
        continue;
      }
      // Compact canonical constructor of a record: `Name {`.
      if (kind == TypeKind::kRecord && IsIdent(i) && Is(i + 1, "{") &&
          toks_[i].text == chain.back()) {
        ScanCode(i + 2, match_[i + 1], chain);
        i = match_[i + 1] + 1;
        continue;
      }
      const std::size_t type_start = i;
      const std::size_t type_end = Type(i);
      if (!IsIdent(type_end)) Fail(type_end, "expected member name");
      if (Is(type_end + 1, "(")) {
        i = Method(start, type_start, type_end, std::move(mods),
                   std::move(type_params), chain);
      } else {
        i = Fields(start, type_start, type_end, std::move(mods), chain);
      }
    }
  }

  // `name` is the index of the method name; [type_start, name) is the
  // return type (empty for constructors).
  std::size_t Method(std::size_t start, std::size_t type_start,
                     std::size_t name, std::vector<std::string> mods,
                     std::optional<std::string> type_params,
                     const std::vector<std::string>& chain) {
    MethodDecl m;
    m.class_chain = chain;
    m.modifiers = std::move(mods);
    m.type_params = std::move(type_params);
    m.return_type = TypeText(type_start, name);
    m.name = toks_[name].text;
    const std::size_t open = name + 1;
    const std::size_t close = match_[open];
    m.param_types = ParamTypes(open, close);
    std::size_t j = close + 1;
    while (Is(j, "[") && Is(j + 1, "]")) {
      m.return_type += "[]";
      j += 2;
    }
    std::size_t end = 0;
    std::optional<std::size_t> body_open;
    if (Is(j, "throws")) {
      ++j;
      while (j < toks_.size() && !Is(j, "{") && !Is(j, ";")) {
        j = match_[j] > j ? match_[j] + 1 : j + 1;
      }
    }
    if (Is(j, "default")) j = FindAtDepth(j, toks_.size(), ";");
    if (Is(j, "{")) {
      body_open = j;
      end = match_[j];
    } else if (Is(j, ";")) {
      end = j;
      m.is_abstract = true;
    } else {
      Fail(j, "expected method body");
    }
    m.body_tokens.assign(toks_.begin() + start, toks_.begin() + end + 1);
    m.params_open = open - start;
    m.params_close = close - start;
    if (body_open) {
      m.body_open = *body_open - start;
      m.body_close = end - start;
    }
    if (auto jd = JavadocFor(start)) {
      m.javadoc = comments_[*jd].text;
      m.javadoc_block = JavadocBlock(comments_[*jd]);
    }
    m.source_text = SourceLines(start, end);
    out_.methods.push_back(std::move(m));
    if (body_open) ScanCode(*body_open + 1, end, chain);
    return end + 1;
  }

  std::size_t Fields(std::size_t start, std::size_t type_start,
                     std::size_t type_end, std::vector<std::string> mods,
                     const std::vector<std::string>& chain) {
    // Split declarators at top-level commas up to the terminating ';'.
    std::vector<std::pair<std::size_t, std::size_t>> declarators;
    std::size_t decl_begin = type_end;
    std::size_t i = type_end;
    while (true) {
      if (i >= toks_.size()) Fail(start, "unterminated field declaration");
      const Token& t = toks_[i];
      if (t.text == ";" || t.text == ",") {
        declarators.emplace_back(decl_begin, i);
        if (t.text == ";") break;
        decl_begin = i + 1;
        ++i;
      } else if (t.IsKeyword("new")) {
        i = AfterCreatorType(i);
      } else if (t.text == "." && Is(i + 1, "<")) {
        i = SkipAngles(i + 1);
      } else if (t.text == "}" || t.text == ")" || t.text == "]") {
        Fail(i, "unexpected closing bracket in field declaration");
      } else if (match_[i] > i) {
        i = match_[i] + 1;
      } else {
        ++i;
      }
    }
    const std::size_t semi = i;
    const std::string base_type = TypeText(type_start, type_end);
    std::optional<std::size_t> jd = JavadocFor(start);
    const std::string source = SourceLines(start, semi);
    for (auto [b, e] : declarators) {
      if (!IsIdent(b)) Fail(b, "expected field name");
      FieldDecl f;
      f.class_chain = chain;
      f.modifiers = mods;
      f.field_type = base_type;
      f.name = toks_[b].text;
      for (std::size_t k = b + 1; Is(k, "[") && Is(k + 1, "]"); k += 2) {
        f.field_type += "[]";
      }
      f.decl_tokens.assign(toks_.begin() + start, toks_.begin() + type_end);
      f.decl_tokens.insert(f.decl_tokens.end(), toks_.begin() + b,
                           toks_.begin() + e);
      f.decl_tokens.push_back(toks_[semi]);
      if (jd) {
        f.javadoc = comments_[*jd].text;
        f.javadoc_block = JavadocBlock(comments_[*jd]);
      }
      f.source_text = source;
      out_.fields.push_back(std::move(f));
    }
    ScanCode(type_end, semi, chain);
    return semi + 1;
  }

  // `i` is at `new`; returns the index after the created type, before any
  // arguments, dimensions or class body.
  std::size_t AfterCreatorType(std::size_t i) const {
    std::size_t j = i + 1;
    if (Is(j, "<")) j = SkipAngles(j);
    try {
      std::size_t k = j;
      while (IsAnnotationAt(k)) k = SkipAnnotation(k);
      if (k < toks_.size() &&
          (IsIdent(k) || kPrimitiveTypes.contains(toks_[k].text))) {
        ++k;
        if (Is(k, "<")) k = SkipAngles(k);
        while (Is(k, ".") && IsIdent(k + 1)) {
          k += 2;
          if (Is(k, "<")) k = SkipAngles(k);
        }
        return k;
      }
    } catch (const ParseError&) {
    }
    return j;
  }

  bool AtStatementStart(std::size_t i, std::size_t from) const {
    if (i == from) return true;
    const std::string& prev = toks_[i - 1].text;
    return prev == ";" || prev == "{" || prev == "}" || prev == ":" ||
           prev == "->" ||
           (toks_[i - 1].kind == TokenKind::kKeyword &&
            kModifierKeywords.contains(prev)) ||
           prev == ")" /* annotation arguments */ ||
           toks_[i - 1].IsIdentifier() /* annotation name */;
  }

  // Finds anonymous and local classes inside code between [from, to).
  void ScanCode(std::size_t from, std::size_t to,
                const std::vector<std::string>& chain) {
    std::size_t i = from;
    while (i < to) {
      const Token& t = toks_[i];
      if (t.IsKeyword("new")) {
        const std::size_t k = AfterCreatorType(i);
        if (Is(k, "(") && Is(match_[k] + 1, "{")) {
          ScanCode(k + 1, match_[k], chain);
          AnonymousBody(match_[k] + 1, chain);
          i = match_[match_[k] + 1] + 1;
          continue;
        }
        i = k;
        continue;
      }
      const bool after_dot = i > from && (toks_[i - 1].text == "." ||
                                           toks_[i - 1].text == "::");
      if (!after_dot && (t.IsKeyword("class") || t.IsKeyword("interface") ||
                         t.IsKeyword("enum") ||
                         (t.text == "@" && Is(i + 1, "interface")))) {
        if (IsIdent(i + 1) || Is(i + 1, "interface")) {
          i = TypeDecl(i, chain);
          continue;
        }
      }
      if (t.IsIdentifier() && t.text == "record" && IsTypeDeclStart(i) &&
          AtStatementStart(i, from)) {
        i = TypeDecl(i, chain);
        continue;
      }
      ++i;
    }
  }

  std::string_view src_;
  const std::vector<Token>& toks_;
  const std::vector<Comment>& comments_;
  std::vector<std::size_t> match_;
  std::map<std::size_t, std::size_t> javadoc_before_;
  int anonymous_count_ = 0;
  ExtractedDecls out_;
  Token eof_;
};

}  // namespace

ExtractedDecls Extract(std::string_view source, const LexedSource& lexed) {
  return Parser(source, lexed).Run();
}

ExtractedDecls Extract(std::string_view source) {
  const LexedSource lexed = Lex(source);
  return Extract(source, lexed);
}

}  // namespace mgit
