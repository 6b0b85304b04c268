#include "dforge/parse.hpp"

#include <cctype>

#include "dforge/errors.hpp"

namespace dforge {

bool is_poly_variable(std::string_view name) {
  if (name == "a") return true;
  if (name.size() < 2 || name.size() > 3 || name[0] != 'z' || name[1] == '0') return false;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(name[i])) == 0) return false;
  }
  return true;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MultiPoly run() {
    skip();
    if (at_end()) fail("empty expression");
    MultiPoly p = expr();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t line, std::size_t col) const {
    throw ParseError(msg, line, col);
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())) != 0) advance();
  }

  bool accept(char ch) {
    if (peek() != ch) return false;
    advance();
    skip();
    return true;
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())) != 0) {
      out += peek();
      advance();
    }
    return out;
  }

  MultiPoly expr() {
    MultiPoly out = term();
    while (true) {
      if (accept('+')) {
        out += term();
      } else if (accept('-')) {
        out -= term();
      } else {
        return out;
      }
    }
  }

  MultiPoly term() {
    MultiPoly out = unary();
    while (accept('*')) out *= unary();
    return out;
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    while (peek() == '^') {
      advance();
      skip();
      std::size_t line = line_, col = col_;
      std::string d = digits();
      if (d.empty()) fail("expected an unsigned exponent");
      skip();
      BigInt e(d);
      if (e > kMaxExponent) fail_at("exponent overflow: " + d, line, col);
      base = pow(base, e.get_ui());
    }
    return base;
  }

  MultiPoly primary() {
    if (at_end()) fail("unexpected end of input");
    char ch = peek();
    if (ch == '(') {
      advance();
      skip();
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) != 0) {
      std::string d = digits();
      skip();
      return MultiPoly(BigInt(d));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) != 0) {
      std::size_t line = line_, col = col_;
      std::string name;
      while (!at_end() && std::isalnum(static_cast<unsigned char>(peek())) != 0) {
        name += peek();
        advance();
      }
      skip();
      if (!is_poly_variable(name)) fail_at("unknown variable '" + name + "'", line, col);
      return MultiPoly::variable(name);
    }
    fail(std::string("unexpected '") + ch + "'");
  }
};

}  // namespace

MultiPoly parse_poly(std::string_view text) { return Parser(text).run(); }

}  // namespace dforge
