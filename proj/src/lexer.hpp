#pragma once

#include <string>
#include <string_view>

#include "hourglass/errors.hpp"

namespace hourglass::detail {

enum class Tok {
  Ident,
  Number,
  String,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Comma,
  Semicolon,
  Equals,
  Arrow,
  Bang,
  Amp,
  Pipe,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;  // identifier, number literal, or decoded string value
  SourcePos pos;
};

const char* token_name(Tok kind);

// Hand-rolled tokenizer shared by the formula and scenario grammars.
// In scenario mode, '#' starts a comment running to end of line and
// positions carry 1-based line numbers; in formula mode line stays 0 and
// column is the 1-based offset into the string.
class Lexer {
 public:
  enum class Mode { Formula, Scenario };

  Lexer(std::string_view text, Mode mode);

  Token next();

 private:
  SourcePos pos() const;
  char peek() const;
  char advance();
  bool at_end() const { return offset_ >= text_.size(); }
  void skip_blank();
  [[noreturn]] void fail(SourcePos pos, const std::string& message) const;

  std::string_view text_;
  Mode mode_;
  std::size_t offset_ = 0;
  int line_ = 1;
  int column_ = 1;
};

// One-token-lookahead cursor over a Lexer.
class TokenStream {
 public:
  TokenStream(std::string_view text, Lexer::Mode mode)
      : lexer_(text, mode), lookahead_(lexer_.next()) {}

  const Token& peek() const { return lookahead_; }

  Token advance() {
    Token current = lookahead_;
    lookahead_ = lexer_.next();
    return current;
  }

  bool check(Tok kind) const { return lookahead_.kind == kind; }

  // Consumes the lookahead if it matches.
  bool accept(Tok kind) {
    if (!check(kind)) return false;
    advance();
    return true;
  }

  Token expect(Tok kind, const std::string& what);

 private:
  Lexer lexer_;
  Token lookahead_;
};

}  // namespace hourglass::detail
