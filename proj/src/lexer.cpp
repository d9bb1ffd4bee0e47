#include "lexer.hpp"

#include <cctype>

namespace hourglass::detail {

const char* token_name(Tok kind) {
  switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::String: return "string";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Semicolon: return "';'";
    case Tok::Equals: return "'='";
    case Tok::Arrow: return "'->'";
    case Tok::Bang: return "'!'";
    case Tok::Amp: return "'&'";
    case Tok::Pipe: return "'|'";
    case Tok::End: return "end of input";
  }
  return "token";
}

Lexer::Lexer(std::string_view text, Mode mode) : text_(text), mode_(mode) {}

SourcePos Lexer::pos() const {
  return {mode_ == Mode::Scenario ? line_ : 0, column_};
}

char Lexer::peek() const { return at_end() ? '\0' : text_[offset_]; }

char Lexer::advance() {
  char c = text_[offset_++];
  if (c == '\n') {
    ++line_;
    column_ = 1;
  } else {
    ++column_;
  }
  return c;
}

void Lexer::skip_blank() {
  while (!at_end()) {
    char c = peek();
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
    } else if (c == '#' && mode_ == Mode::Scenario) {
      while (!at_end() && peek() != '\n') advance();
    } else {
      break;
    }
  }
}

void Lexer::fail(SourcePos pos, const std::string& message) const {
  throw SyntaxError(pos, message);
}

Token Lexer::next() {
  skip_blank();
  SourcePos start = pos();
  if (at_end()) return {Tok::End, "", start};

  char c = advance();
  switch (c) {
    case '{': return {Tok::LBrace, "{", start};
    case '}': return {Tok::RBrace, "}", start};
    case '(': return {Tok::LParen, "(", start};
    case ')': return {Tok::RParen, ")", start};
    case ',': return {Tok::Comma, ",", start};
    case ';': return {Tok::Semicolon, ";", start};
    case '=': return {Tok::Equals, "=", start};
    case '!': return {Tok::Bang, "!", start};
    case '&': return {Tok::Amp, "&", start};
    case '|': return {Tok::Pipe, "|", start};
    case '-':
      if (peek() == '>') {
        advance();
        return {Tok::Arrow, "->", start};
      }
      fail(start, "unexpected character '-' (did you mean '->'?)");
    case '"': {
      std::string value;
      while (true) {
        if (at_end() || peek() == '\n') fail(start, "unterminated string literal");
        char d = advance();
        if (d == '"') break;
        if (d == '\\') {
          if (at_end()) fail(start, "unterminated string literal");
          char e = advance();
          if (e == '"' || e == '\\') {
            value.push_back(e);
          } else {
            fail(pos(), std::string("invalid escape '\\") + e + "' in string");
          }
        } else {
          value.push_back(d);
        }
      }
      return {Tok::String, value, start};
    }
    default:
      break;
  }

  if (std::isalpha(static_cast<unsigned char>(c))) {
    std::string name(1, c);
    while (!at_end()) {
      char d = peek();
      if (std::isalnum(static_cast<unsigned char>(d)) || d == '_') {
        name.push_back(advance());
      } else {
        break;
      }
    }
    return {Tok::Ident, name, start};
  }

  if (std::isdigit(static_cast<unsigned char>(c))) {
    std::string digits(1, c);
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(advance());
    }
    if (peek() == '.' && offset_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[offset_ + 1]))) {
      digits.push_back(advance());
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        digits.push_back(advance());
      }
    }
    return {Tok::Number, digits, start};
  }

  fail(start, std::string("unexpected character '") + c + "'");
}

Token TokenStream::expect(Tok kind, const std::string& what) {
  if (!check(kind)) {
    throw SyntaxError(peek().pos, "expected " + what + ", found " +
                                      token_name(peek().kind));
  }
  return advance();
}

}  // namespace hourglass::detail
