#pragma once

// Recursive-descent parser for field expressions:
//
//   expr   := ['-'|'+'] term { ('+'|'-') term }
//   term   := factor { ['*'|'/'] factor }
//   factor := atom [ '^' ['-'] integer ]
//   atom   := integer | '(' expr ')' | <identifier handled by the caller>
//
// The value type must support + - * / and a pow(int) member.

#include <cctype>
#include <functional>
#include <string>
#include <string_view>

#include "qogz/errors.hpp"

namespace qogz::detail {

template <class T>
class ExprParser {
 public:
  /// `atom` is called with the cursor at an identifier character; it must
  /// consume the identifier (advancing pos) and return its value.
  using AtomFn = std::function<T(std::string_view, std::size_t&)>;

  ExprParser(std::string_view text, AtomFn atom, std::function<T(long)> from_int)
      : s_(text), atom_(std::move(atom)), from_int_(std::move(from_int)) {}

  T parse() {
    T v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  long integer() {
    skip();
    bool neg = eat('-');
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = v * 10 + (s_[pos_++] - '0');
    return neg ? -v : v;
  }

  T expr() {
    skip();
    bool neg = false;
    if (eat('-')) {
      neg = true;
    } else {
      eat('+');
    }
    T v = term();
    if (neg) v = from_int_(0) - v;
    while (true) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  T term() {
    T v = factor();
    while (true) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        v = v / factor();
      } else {
        return v;
      }
    }
  }

  T factor() {
    T v = atom();
    if (eat('^')) v = v.pow(static_cast<int>(integer()));
    return v;
  }

  T atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      T v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return from_int_(integer());
    if (std::isalpha(static_cast<unsigned char>(c))) return atom_(s_, pos_);
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  AtomFn atom_;
  std::function<T(long)> from_int_;
};

}  // namespace qogz::detail
