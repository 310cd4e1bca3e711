#include "pcn/lexer.hpp"

#include <array>
#include <cctype>

namespace pcn {

namespace {

bool is_ident_start(unsigned char c) {
  return c == '_' || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_ident_char(unsigned char c) {
  return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

// Multi-character punctuators, longest first for maximal munch.
constexpr std::array<std::string_view, 22> kPunctuators = {
    "...", "<<=", ">>=", "->", "++", "--", "<<", ">>", "<=", ">=", "==",
    "!=",  "&&",  "||",  "+=", "-=", "*=", "/=", "%=", "&=", "^=", "|=",
};

class Scanner {
 public:
  Scanner(std::string_view src, const std::string& file)
      : src_(src), file_(file) {}

  LexResult run() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        advance_newline();
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f') {
        ++pos_;
        continue;
      }
      if (c == '\\' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '\n') {
        pos_ += 2;  // line splice
        ++line_;
        continue;
      }
      if (c == '/' && peek(1) == '/') {
        skip_line_comment();
        continue;
      }
      if (c == '/' && peek(1) == '*') {
        skip_block_comment();
        continue;
      }
      if (c == '#' && at_line_start_) {
        lex_preprocessor_line();
        continue;
      }
      at_line_start_ = false;
      if (c == '"') {
        lex_string_like('"', TokenKind::String, "unterminated string literal");
        continue;
      }
      if (c == '\'') {
        lex_string_like('\'', TokenKind::Char, "unterminated character literal");
        continue;
      }
      if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
        lex_number();
        continue;
      }
      if (is_ident_start(c)) {
        lex_identifier();
        continue;
      }
      lex_punct();
    }
    return LexResult{std::move(tokens_), std::move(diagnostics_)};
  }

 private:
  char peek(std::size_t off) const {
    return pos_ + off < src_.size() ? src_[pos_ + off] : '\0';
  }

  void advance_newline() {
    ++pos_;
    ++line_;
    at_line_start_ = true;
  }

  void emit(TokenKind kind, std::size_t begin, std::size_t end,
            std::uint32_t line) {
    tokens_.push_back(Token{kind, src_.substr(begin, end - begin), line});
  }

  void diag(std::uint32_t line, std::string message) {
    diagnostics_.push_back(Diagnostic{file_, line, std::move(message)});
  }

  void skip_line_comment() {
    pos_ += 2;
    while (pos_ < src_.size()) {
      if (src_[pos_] == '\\' && peek(1) == '\n') {
        pos_ += 2;  // comment continues on the spliced line
        ++line_;
        continue;
      }
      if (src_[pos_] == '\n') return;  // newline handled by main loop
      ++pos_;
    }
  }

  void skip_block_comment() {
    const std::uint32_t start_line = line_;
    pos_ += 2;
    while (pos_ < src_.size()) {
      if (src_[pos_] == '*' && peek(1) == '/') {
        pos_ += 2;
        return;
      }
      if (src_[pos_] == '\n') ++line_;
      ++pos_;
    }
    diag(start_line, "unterminated block comment");
  }

  // Consumes a quote-delimited literal inside a preprocessor line.
  void skip_directive_literal(char quote) {
    ++pos_;
    while (pos_ < src_.size() && src_[pos_] != '\n') {
      if (src_[pos_] == '\\' && pos_ + 1 < src_.size() && peek(1) != '\n') {
        pos_ += 2;
        continue;
      }
      if (src_[pos_] == quote) {
        ++pos_;
        return;
      }
      ++pos_;
    }
  }

  void lex_preprocessor_line() {
    const std::size_t begin = pos_;
    const std::uint32_t start_line = line_;
    ++pos_;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') break;
      if (c == '\\' && peek(1) == '\n') {
        pos_ += 2;  // continuation joins the next physical line
        ++line_;
        continue;
      }
      if (c == '/' && peek(1) == '*') {
        skip_block_comment();
        continue;
      }
      if (c == '/' && peek(1) == '/') {
        skip_line_comment();
        break;
      }
      if (c == '"' || c == '\'') {
        skip_directive_literal(c);
        continue;
      }
      ++pos_;
    }
    emit(TokenKind::PreprocessorLine, begin, pos_, start_line);
    at_line_start_ = false;
  }

  void lex_string_like(char quote, TokenKind kind, const char* diag_msg) {
    const std::size_t begin = pos_;
    const std::uint32_t start_line = line_;
    ++pos_;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\\' && pos_ + 1 < src_.size()) {
        if (peek(1) == '\n') ++line_;
        pos_ += 2;
        continue;
      }
      if (c == quote) {
        ++pos_;
        emit(kind, begin, pos_, start_line);
        return;
      }
      if (c == '\n') {
        // Terminate at the newline and resume scanning on the next line.
        diag(start_line, diag_msg);
        emit(kind, begin, pos_, start_line);
        return;
      }
      ++pos_;
    }
    diag(start_line, diag_msg);
    emit(kind, begin, pos_, start_line);
  }

  void lex_number() {
    const std::size_t begin = pos_;
    const std::uint32_t start_line = line_;
    ++pos_;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if ((c == 'e' || c == 'E' || c == 'p' || c == 'P') &&
          (peek(1) == '+' || peek(1) == '-')) {
        pos_ += 2;
        continue;
      }
      if (is_ident_char(c) || c == '.') {
        ++pos_;
        continue;
      }
      break;
    }
    emit(TokenKind::Number, begin, pos_, start_line);
  }

  void lex_identifier() {
    const std::size_t begin = pos_;
    const std::uint32_t start_line = line_;
    ++pos_;
    while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
    emit(TokenKind::Identifier, begin, pos_, start_line);
  }

  void lex_punct() {
    const std::string_view rest = src_.substr(pos_);
    for (std::string_view p : kPunctuators) {
      if (rest.starts_with(p)) {
        emit(TokenKind::Punct, pos_, pos_ + p.size(), line_);
        pos_ += p.size();
        return;
      }
    }
    // Single byte; bytes >= 0x80 act as punctuation-equivalent separators.
    emit(TokenKind::Punct, pos_, pos_ + 1, line_);
    ++pos_;
  }

  std::string_view src_;
  const std::string& file_;
  std::size_t pos_ = 0;
  std::uint32_t line_ = 1;
  bool at_line_start_ = true;
  std::vector<Token> tokens_;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace

LexResult tokenize(std::string_view source_text, const std::string& file) {
  return Scanner(source_text, file).run();
}

}  // namespace pcn
