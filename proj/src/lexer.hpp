#pragma once

// Tokenizer shared by the scalar, polynomial and diag(...) parsers.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "hypaut/errors.hpp"

namespace hypaut::detail {

enum class Tok { Number, Zeta, Var, Caret, Star, Slash, Plus, Minus, LParen, RParen, Comma, LBrace, RBrace, Ident, End };

struct Token {
  Tok kind = Tok::End;
  mpz_class number;   // Number
  long index = 0;     // Zeta level or Var index
  std::string text;   // Ident
  std::size_t pos = 0;
};

inline std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto read_digits = [&](std::size_t& j) {
    std::size_t start = j;
    while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
    return std::string(s.substr(start, j - start));
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    Token t;
    t.pos = i;
    if (c >= '0' && c <= '9') {
      t.kind = Tok::Number;
      t.number = mpz_class(read_digits(i));
    } else if ((c == 'z' || c == 'X' || c == 'x') && i + 1 < s.size() && s[i + 1] >= '0' && s[i + 1] <= '9') {
      ++i;
      std::string digits = read_digits(i);
      if (digits.size() > 9) throw SyntaxError("index too large at position " + std::to_string(t.pos));
      t.kind = (c == 'z') ? Tok::Zeta : Tok::Var;
      t.index = std::stol(digits);
    } else if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
      std::size_t start = i;
      while (i < s.size() && ((s[i] >= 'a' && s[i] <= 'z') || (s[i] >= 'A' && s[i] <= 'Z') || s[i] == '_')) ++i;
      t.kind = Tok::Ident;
      t.text = std::string(s.substr(start, i - start));
    } else {
      switch (c) {
        case '^': t.kind = Tok::Caret; break;
        case '*': t.kind = Tok::Star; break;
        case '/': t.kind = Tok::Slash; break;
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case ',': t.kind = Tok::Comma; break;
        case '{': t.kind = Tok::LBrace; break;
        case '}': t.kind = Tok::RBrace; break;
        default:
          throw SyntaxError(std::string("unexpected character '") + c + "' at position " + std::to_string(i));
      }
      ++i;
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::End;
  end.pos = s.size();
  out.push_back(end);
  return out;
}

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    return next();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg + " at position " + std::to_string(peek().pos));
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

/// Signed integer exponent after '^'.
inline long parse_exponent(TokenStream& ts) {
  bool neg = ts.accept(Tok::Minus);
  const Token& t = ts.expect(Tok::Number, "exponent");
  if (!t.number.fits_slong_p()) ts.fail("exponent out of range");
  long v = t.number.get_si();
  return neg ? -v : v;
}

}  // namespace hypaut::detail
