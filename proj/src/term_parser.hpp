#pragma once

// Internal: scanner for sums of monomial terms `c*x^k`, `c x^k`, `x^k`, `x`,
// `c` joined by `+`/`-`. The coefficient grammar is supplied by the caller.

#include <cctype>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cpf/errors.hpp"

namespace cpf::detail {

template <class Coef>
struct Term {
  bool negative = false;
  Coef coef{};
  bool has_coef = false;
  std::size_t exponent = 0;
};

class TermScanner {
 public:
  TermScanner(std::string_view text, char var) : var_(var) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
    if (text_.empty()) fail("empty input");
  }

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void advance() { ++pos_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + text_ + "': " + what + " at position " +
                     std::to_string(pos_));
  }

  std::size_t read_uint() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    std::size_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > (std::size_t{1} << 40)) fail("number too large");
      v = v * 10 + static_cast<std::size_t>(peek() - '0');
      advance();
    }
    return v;
  }

  // Returns the balanced-parenthesis contents starting at '('.
  std::string read_parenthesized() {
    if (peek() != '(') fail("expected '('");
    advance();
    const std::size_t start = pos_;
    int depth = 1;
    while (!done()) {
      if (peek() == '(') ++depth;
      if (peek() == ')' && --depth == 0) break;
      advance();
    }
    if (done()) fail("unbalanced parenthesis");
    std::string inner = text_.substr(start, pos_ - start);
    advance();
    return inner;
  }

  // `parse_coef` is called with the scanner positioned at a coefficient
  // (digit or '('); it must consume it and return the value.
  template <class Coef>
  std::vector<Term<Coef>> scan(const std::function<Coef(TermScanner&)>& parse_coef) {
    std::vector<Term<Coef>> terms;
    bool first = true;
    while (!done()) {
      Term<Coef> term;
      if (peek() == '+' || peek() == '-') {
        term.negative = peek() == '-';
        advance();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '(') {
        term.coef = parse_coef(*this);
        term.has_coef = true;
        if (peek() == '*') {
          advance();
          if (peek() != var_) fail(std::string("expected '") + var_ + "' after '*'");
        }
      }
      if (peek() == var_) {
        advance();
        term.exponent = 1;
        if (peek() == '^') {
          advance();
          term.exponent = read_uint();
        }
      } else if (!term.has_coef) {
        fail("expected a term");
      }
      terms.push_back(term);
    }
    return terms;
  }

 private:
  std::string text_;
  std::size_t pos_ = 0;
  char var_;
};

}  // namespace cpf::detail
