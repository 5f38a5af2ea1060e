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

#include <gtest/gtest.h>

#include <string>
#include <vector>

namespace mgit {
namespace {

std::vector<std::string> Texts(std::string_view src) {
  std::vector<std::string> out;
  for (const Token& t : LexTokens(src)) out.push_back(t.text);
  return out;
}

TEST(LexerTest, ReturnStatement) {
  const auto tokens = LexTokens("return length;");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[0].kind, TokenKind::kKeyword);
  EXPECT_EQ(tokens[1].kind, TokenKind::kIdentifier);
  EXPECT_EQ(tokens[2].kind, TokenKind::kSeparator);
  EXPECT_EQ(tokens[1].text, "length");
  EXPECT_EQ(tokens[1].column, 8);
}

TEST(LexerTest, GetterHasTenTokens) {
  EXPECT_EQ(LexTokens("public int getLength() { return length; }").size(), 10u);
}

TEST(LexerTest, LineCommentDropped) {
  EXPECT_EQ(Texts("// note\nint x;"),
            (std::vector<std::string>{"int", "x", ";"}));
}

TEST(LexerTest, PositionsAreOneBased) {
  const auto tokens = LexTokens("a\n  b");
  ASSERT_EQ(tokens.size(), 2u);
  EXPECT_EQ(tokens[1].line, 2);
  EXPECT_EQ(tokens[1].column, 3);
  EXPECT_EQ(tokens[1].offset, 4u);
}

TEST(LexerTest, ByteLengthIsUtf8) {
  const auto tokens = LexTokens("String s = \"h\xC3\xA9\";");
  ASSERT_EQ(tokens.size(), 5u);
  EXPECT_EQ(tokens[3].byte_len(), 5u);  // quotes + 'h' + 2-byte e-acute
  EXPECT_EQ(tokens[3].kind, TokenKind::kLiteral);
}

TEST(LexerTest, UnicodeIdentifier) {
  const auto tokens = LexTokens("int \xC3\xBC" "ber = 1;");
  ASSERT_EQ(tokens.size(), 5u);
  EXPECT_EQ(tokens[1].text, "\xC3\xBC" "ber");
  EXPECT_EQ(tokens[1].kind, TokenKind::kIdentifier);
}

TEST(LexerTest, Literals) {
  for (const char* lit : {"0x1F", "1_000_000L", "3.14e-2f", ".5", "0b1010",
                          "'\\n'", "\"a\\\"b\"", "true", "null", "1e10",
                          "0777", "2.", "0x1.8p1"}) {
    const auto tokens = LexTokens(lit);
    ASSERT_EQ(tokens.size(), 1u) << lit;
    EXPECT_EQ(tokens[0].kind, TokenKind::kLiteral) << lit;
    EXPECT_EQ(tokens[0].text, lit);
  }
}

TEST(LexerTest, TextBlock) {
  const std::string src = "s = \"\"\"\n  hi \"quoted\"\n  \"\"\";";
  const auto tokens = LexTokens(src);
  ASSERT_EQ(tokens.size(), 4u);
  EXPECT_EQ(tokens[2].text, "\"\"\"\n  hi \"quoted\"\n  \"\"\"");
}

TEST(LexerTest, LongestOperatorMatch) {
  EXPECT_EQ(Texts("a >>>= b"), (std::vector<std::string>{"a", ">>>=", "b"}));
  EXPECT_EQ(Texts("x->y"), (std::vector<std::string>{"x", "->", "y"}));
  EXPECT_EQ(Texts("A::new"), (std::vector<std::string>{"A", "::", "new"}));
  EXPECT_EQ(Texts("f(String... a)"),
            (std::vector<std::string>{"f", "(", "String", "...", "a", ")"}));
  EXPECT_EQ(Texts("i++ + ++j"),
            (std::vector<std::string>{"i", "++", "+", "++", "j"}));
}

TEST(LexerTest, GenericsCloseAsSeparateOrShiftTokens) {
  // The lexer does not know about generics; `>>` is one operator token.
  EXPECT_EQ(Texts("List<List<X>> a"),
            (std::vector<std::string>{"List", "<", "List", "<", "X", ">>",
                                      "a"}));
}

TEST(LexerTest, ContextualKeywordsAreIdentifiers) {
  for (const Token& t : LexTokens("var record yield sealed permits")) {
    EXPECT_EQ(t.kind, TokenKind::kIdentifier) << t.text;
  }
  EXPECT_TRUE(IsJavaKeyword("synchronized"));
  EXPECT_FALSE(IsJavaKeyword("var"));
}

TEST(LexerTest, CommentsOutOfBand) {
  const LexedSource lexed =
      Lex("/** doc */ int a; /* block */ int b; /**/ int c; // end");
  ASSERT_EQ(lexed.comments.size(), 4u);
  EXPECT_EQ(lexed.comments[0].kind, Comment::Kind::kJavadoc);
  EXPECT_EQ(lexed.comments[0].text, "/** doc */");
  EXPECT_EQ(lexed.comments[0].next_token, 0u);
  EXPECT_EQ(lexed.comments[1].kind, Comment::Kind::kBlock);
  EXPECT_EQ(lexed.comments[1].next_token, 3u);
  EXPECT_EQ(lexed.comments[2].kind, Comment::Kind::kBlock);  // "/**/"
  EXPECT_EQ(lexed.comments[3].kind, Comment::Kind::kLine);
  EXPECT_EQ(lexed.comments[3].next_token, lexed.tokens.size());
  EXPECT_EQ(lexed.tokens.size(), 9u);
}

TEST(LexerTest, CommentMarkersInsideStringsAreText) {
  EXPECT_EQ(Texts("s = \"// not /* a comment\";"),
            (std::vector<std::string>{"s", "=", "\"// not /* a comment\"",
                                      ";"}));
}

TEST(LexerTest, UnterminatedConstructsThrow) {
  for (const char* src : {"\"abc", "'a", "/* never closed", "\"\"\"\nopen",
                          "\"line\nbreak\""}) {
    EXPECT_THROW(LexTokens(src), LexError) << src;
  }
}

TEST(LexerTest, LexErrorCarriesPosition) {
  try {
    LexTokens("int a;\n  \"oops");
    FAIL();
  } catch (const LexError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
    EXPECT_EQ(e.offset(), 9u);
  }
}

TEST(LexerTest, EmptyAndWhitespace) {
  EXPECT_TRUE(LexTokens("").empty());
  EXPECT_TRUE(LexTokens(" \t\r\n\f").empty());
}

TEST(LexerTest, Annotations) {
  EXPECT_EQ(Texts("@Override @interface"),
            (std::vector<std::string>{"@", "Override", "@", "interface"}));
}

// Property: concatenating token texts with single spaces re-lexes to the
// same token texts.
TEST(LexerTest, RelexRoundTrip) {
  const std::string src = R"(
    package a.b;
    import java.util.*;
    /** Doc. */
    public final class X<T extends Comparable<T>> implements Y {
      private static final long serialVersionUID = 0x7fL; // id
      int[] xs = {1, 2, 3};
      @SuppressWarnings("unchecked")
      <R> R map(java.util.function.Function<? super T, ? extends R> f) {
        return f.apply((T) (Object) "s\t");
      }
      void g() { for (int i = 0; i < 10; i++) { if (i % 2 == 0) continue; } }
      char c = '\'';
      String t = """
          block
          """;
    }
  )";
  std::string joined;
  for (const Token& t : LexTokens(src)) joined += t.text + " ";
  EXPECT_EQ(Texts(joined), Texts(src));
}

}  // namespace
}  // namespace mgit
