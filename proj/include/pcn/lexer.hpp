#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pcn {

enum class TokenKind : std::uint8_t {
  Identifier,
  Punct,
  Number,
  String,
  Char,
  PreprocessorLine,
};

/// One lexical token. `text` is a view into the source buffer passed to
/// tokenize(); it must not outlive that buffer.
struct Token {
  TokenKind kind;
  std::string_view text;
  std::uint32_t line;  // 1-based line of the token's first character

  bool is_punct(std::string_view p) const {
    return kind == TokenKind::Punct && text == p;
  }
};

struct Diagnostic {
  std::string file;
  std::uint32_t line;
  std::string message;
};

struct LexResult {
  std::vector<Token> tokens;
  std::vector<Diagnostic> diagnostics;
};

/// Tolerant lexical scan of C source text. Comments are elided, string and
/// character literals are kept as single opaque tokens, and a '#' directive
/// (with backslash continuations joined) becomes one PreprocessorLine token.
/// Never throws on malformed input; problems are reported as diagnostics
/// and scanning resumes at the next line.
LexResult tokenize(std::string_view source_text, const std::string& file);

}  // namespace pcn
