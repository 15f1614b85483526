#pragma once

// Small integer expression reader shared by the notation and template parsers.
// Grammar: expr := term (('+'|'-') term)*; term := factor (('*'|'/'|juxtaposition) factor)*;
// factor := INT | name | '(' expr ')' | 'floor' '(' expr ')' | '-' factor. '/' is floor division.

#include <cctype>
#include <map>
#include <string>
#include <string_view>

#include "gorjdt/errors.hpp"

namespace gorjdt::detail {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char peek_raw() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view word) {
    skip();
    if (s_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) throw SyntaxError(std::string("expected '") + c + "'", pos_);
  }
  std::size_t pos() const { return pos_; }
  void reset(std::size_t p) { pos_ = p; }
  std::string_view text() const { return s_; }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected integer", pos_);
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

using Bindings = std::map<std::string, long>;

inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

class IntExpr {
 public:
  IntExpr(Cursor& c, const Bindings& b) : c_(c), b_(b) {}

  long expr() {
    long v = term();
    for (;;) {
      if (c_.accept('+'))
        v += term();
      else if (c_.accept('-'))
        v -= term();
      else
        return v;
    }
  }

  long factor() {
    if (c_.accept('-')) return -factor();
    char ch = c_.peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) return c_.integer();
    if (c_.accept('(')) {
      long v = expr();
      c_.expect(')');
      return v;
    }
    if (c_.accept("floor")) {
      c_.expect('(');
      long v = expr();
      c_.expect(')');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::string name(1, ch);
      std::size_t at = c_.pos();
      c_.reset(at + 1);
      auto it = b_.find(name);
      if (it == b_.end()) throw SyntaxError("unbound name '" + name + "'", at);
      return it->second;
    }
    throw SyntaxError("expected integer expression", c_.pos());
  }

 private:
  long term() {
    long v = factor();
    for (;;) {
      if (c_.accept('*')) {
        v *= factor();
      } else if (c_.accept('/')) {
        long d = factor();
        if (d == 0) throw SyntaxError("division by zero", c_.pos());
        v = floor_div(v, d);
      } else {
        char ch = c_.peek();
        // juxtaposition such as 3i or 2j
        if (std::isalpha(static_cast<unsigned char>(ch)) && b_.count(std::string(1, ch)) &&
            !c_.text().substr(c_.pos()).starts_with("floor"))
          v *= factor();
        else
          return v;
      }
    }
  }

  Cursor& c_;
  const Bindings& b_;
};

}  // namespace gorjdt::detail
