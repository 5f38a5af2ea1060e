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

#include "mgit/lexer.h"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace mgit {

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdentifier: return "IDENTIFIER";
    case TokenKind::kKeyword: return "KEYWORD";
    case TokenKind::kLiteral: return "LITERAL";
    case TokenKind::kOperator: return "OPERATOR";
    case TokenKind::kSeparator: return "SEPARATOR";
  }
  return "UNKNOWN";
}

LexError::LexError(const std::string& what, std::size_t offset, int line,
                   int column)
    : std::runtime_error(what + " at " + std::to_string(line) + ":" +
                         std::to_string(column)),
      offset_(offset),
      line_(line),
      column_(column) {}

bool IsJavaKeyword(std::string_view word) {
  static const std::unordered_set<std::string_view> kKeywords = {
      "abstract",  "assert",       "boolean",   "break",      "byte",
      "case",      "catch",        "char",      "class",      "const",
      "continue",  "default",      "do",        "double",     "else",
      "enum",      "extends",      "final",     "finally",    "float",
      "for",       "goto",         "if",        "implements", "import",
      "instanceof", "int",         "interface", "long",       "native",
      "new",       "package",      "private",   "protected",  "public",
      "return",    "short",        "static",    "strictfp",   "super",
      "switch",    "synchronized", "this",      "throw",      "throws",
      "transient", "try",          "void",      "volatile",   "while",
  };
  return kKeywords.contains(word);
}

namespace {

// Longest first within each leading character.
constexpr std::array<std::string_view, 43> kOperators = {
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "&&", "||",
    "==",   "!=",  "<=",  ">=",  "+=",  "-=", "*=", "/=", "&=", "|=", "^=",
    "%=",   "<<",  ">>",  "=",   ">",   "<",  "!",  "~",  "?",  ":",  "+",
    "-",    "*",   "/",   "&",   "|",   "^",  "%",  "@",  ".",  ",",
};

bool IsSeparatorText(std::string_view t) {
  return t == "(" || t == ")" || t == "{" || t == "}" || t == "[" ||
         t == "]" || t == ";" || t == "," || t == "." || t == "..." ||
         t == "@" || t == "::";
}

bool IsIdentStart(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c == '$' || c >= 0x80;
}

bool IsIdentPart(unsigned char c) {
  return IsIdentStart(c) || (c >= '0' && c <= '9');
}

bool IsDigit(unsigned char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  LexedSource Run() {
    while (pos_ < src_.size()) {
      const unsigned char c = src_[pos_];
      if (c == '\n') {
        Advance(1);
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\f') {
        Advance(1);
      } else if (c == '/' && Peek(1) == '/') {
        LineComment();
      } else if (c == '/' && Peek(1) == '*') {
        BlockComment();
      } else if (IsIdentStart(c)) {
        Word();
      } else if (IsDigit(c) || (c == '.' && IsDigit(Peek(1)))) {
        Number();
      } else if (c == '"') {
        if (Peek(1) == '"' && Peek(2) == '"') {
          TextBlock();
        } else {
          Quoted('"', "unterminated string literal");
        }
      } else if (c == '\'') {
        Quoted('\'', "unterminated character literal");
      } else {
        Punctuation();
      }
    }
    for (auto& comment : out_.comments) {
      if (comment.next_token == kPending) comment.next_token = out_.tokens.size();
    }
    return std::move(out_);
  }

 private:
  static constexpr std::size_t kPending = static_cast<std::size_t>(-1);

  unsigned char Peek(std::size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void Advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i, ++pos_) {
      if (src_[pos_] == '\n') {
        ++line_;
        line_start_ = pos_ + 1;
      }
    }
  }

  int Column() const { return static_cast<int>(pos_ - line_start_) + 1; }

  [[noreturn]] void Fail(const std::string& what, std::size_t at, int line,
                         int col) const {
    throw LexError(what, at, line, col);
  }

  void Emit(std::size_t start, int line, int col, TokenKind kind) {
    Token tok;
    tok.text = std::string(src_.substr(start, pos_ - start));
    tok.kind = kind;
    tok.line = line;
    tok.column = col;
    tok.offset = start;
    for (auto it = out_.comments.rbegin();
         it != out_.comments.rend() && it->next_token == kPending; ++it) {
      it->next_token = out_.tokens.size();
    }
    out_.tokens.push_back(std::move(tok));
  }

  void AddComment(Comment::Kind kind, std::size_t start, int line, int col) {
    Comment c;
    c.kind = kind;
    c.text = std::string(src_.substr(start, pos_ - start));
    c.offset = start;
    c.line = line;
    c.column = col;
    c.next_token = kPending;
    out_.comments.push_back(std::move(c));
  }

  void LineComment() {
    const std::size_t start = pos_;
    const int line = line_, col = Column();
    while (pos_ < src_.size() && src_[pos_] != '\n') Advance(1);
    AddComment(Comment::Kind::kLine, start, line, col);
  }

  void BlockComment() {
    const std::size_t start = pos_;
    const int line = line_, col = Column();
    // "/**/" is an empty block comment, not Javadoc.
    const bool javadoc = Peek(2) == '*' && Peek(3) != '/';
    Advance(2);
    while (true) {
      if (pos_ >= src_.size()) Fail("unterminated comment", start, line, col);
      if (src_[pos_] == '*' && Peek(1) == '/') {
        Advance(2);
        break;
      }
      Advance(1);
    }
    AddComment(javadoc ? Comment::Kind::kJavadoc : Comment::Kind::kBlock, start,
               line, col);
  }

  void Word() {
    const std::size_t start = pos_;
    const int line = line_, col = Column();
    while (pos_ < src_.size() && IsIdentPart(src_[pos_])) ++pos_;
    const std::string_view word = src_.substr(start, pos_ - start);
    TokenKind kind = TokenKind::kIdentifier;
    if (word == "true" || word == "false" || word == "null") {
      kind = TokenKind::kLiteral;
    } else if (IsJavaKeyword(word)) {
      kind = TokenKind::kKeyword;
    }
    Emit(start, line, col, kind);
  }

  void Number() {
    const std::size_t start = pos_;
    const int line = line_, col = Column();
    const bool hex = src_[pos_] == '0' && (Peek(1) == 'x' || Peek(1) == 'X');
    if (hex) pos_ += 2;
    while (pos_ < src_.size()) {
      const unsigned char c = src_[pos_];
      const unsigned char prev = src_[pos_ - 1];
      if (IsIdentPart(c) && c != '$' && c < 0x80) {
        ++pos_;
      } else if (c == '.' && IsDigit(Peek(1))) {
        ++pos_;
      } else if (c == '.' && !hex && Peek(1) != '.' && !IsIdentStart(Peek(1))) {
        ++pos_;  // "1." or "1.e5"
      } else if (c == '.' && !hex && (Peek(1) == 'e' || Peek(1) == 'E' ||
                                      Peek(1) == 'f' || Peek(1) == 'F' ||
                                      Peek(1) == 'd' || Peek(1) == 'D')) {
        ++pos_;
      } else if (c == '.' && hex) {
        ++pos_;
      } else if ((c == '+' || c == '-') &&
                 ((!hex && (prev == 'e' || prev == 'E')) ||
                  (hex && (prev == 'p' || prev == 'P')))) {
        ++pos_;
      } else {
        break;
      }
    }
    Emit(start, line, col, TokenKind::kLiteral);
  }

  void Quoted(char quote, const char* error) {
    const std::size_t start = pos_;
    const int line = line_, col = Column();
    ++pos_;
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') {
        Fail(error, start, line, col);
      }
      const char c = src_[pos_];
      if (c == '\\') {
        if (pos_ + 1 >= src_.size() || src_[pos_ + 1] == '\n') {
          Fail(error, start, line, col);
        }
        pos_ += 2;
      } else if (c == quote) {
        ++pos_;
        break;
      } else {
        ++pos_;
      }
    }
    Emit(start, line, col, TokenKind::kLiteral);
  }

  void TextBlock() {
    const std::size_t start = pos_;
    const int line = line_, col = Column();
    Advance(3);
    while (true) {
      if (pos_ >= src_.size()) Fail("unterminated text block", start, line, col);
      if (src_[pos_] == '\\') {
        Advance(2);
      } else if (src_.substr(pos_, 3) == "\"\"\"") {
        Advance(3);
        break;
      } else {
        Advance(1);
      }
    }
    Emit(start, line, col, TokenKind::kLiteral);
  }

  void Punctuation() {
    const std::size_t start = pos_;
    const int line = line_, col = Column();
    const std::string_view rest = src_.substr(pos_);
    for (std::string_view single : {"(", ")", "{", "}", "[", "]", ";"}) {
      if (rest.starts_with(single)) {
        pos_ += 1;
        Emit(start, line, col, TokenKind::kSeparator);
        return;
      }
    }
    for (std::string_view op : kOperators) {
      if (rest.starts_with(op)) {
        pos_ += op.size();
        Emit(start, line, col,
             IsSeparatorText(op) ? TokenKind::kSeparator : TokenKind::kOperator);
        return;
      }
    }
    // Stray bytes (e.g. a lone backslash) become single-byte operators so the
    // structural parser can still decide whether the file is usable.
    pos_ += 1;
    Emit(start, line, col, TokenKind::kOperator);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_start_ = 0;
  int line_ = 1;
  LexedSource out_;
};

}  // namespace

LexedSource Lex(std::string_view source) { return Lexer(source).Run(); }

std::vector<Token> LexTokens(std::string_view source) {
  return Lex(source).tokens;
}

}  // namespace mgit
