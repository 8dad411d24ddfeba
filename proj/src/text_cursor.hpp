#pragma once

#include <cctype>
#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>

#include "ordcx/errors.hpp"

namespace ordcx::detail {

// Position-tracking reader shared by the literal, family and expression parsers.
class TextCursor {
 public:
  explicit TextCursor(std::string_view text, std::size_t line = 1, std::size_t column = 1)
      : text_(text), line_(line), column0_(column) {}

  bool eof() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }
  std::size_t pos() const { return pos_; }
  std::size_t column() const { return column0_ + pos_; }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    const char after = peek(w.size());
    if (std::isalnum(static_cast<unsigned char>(after)) || after == '_') return false;
    pos_ += w.size();
    return true;
  }

  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool at_number() {
    skip_ws();
    return std::isdigit(static_cast<unsigned char>(peek())) ||
           (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1))));
  }

  // Unsigned decimal: digits[.digits][e[+-]digits].
  double number() {
    skip_ws();
    const std::size_t start = pos_;
    auto digits = [&] {
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    };
    digits();
    if (peek() == '.') {
      ++pos_;
      digits();
    }
    if ((peek() == 'e' || peek() == 'E') &&
        (std::isdigit(static_cast<unsigned char>(peek(1))) ||
         ((peek(1) == '+' || peek(1) == '-') && std::isdigit(static_cast<unsigned char>(peek(2)))))) {
      pos_ += 2;
      digits();
    }
    if (pos_ == start) fail("expected a number" + found());
    double v = 0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
      pos_ = start;
      fail("malformed number");
    }
    return v;
  }

  unsigned long integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected an integer" + found());
    unsigned long v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc()) {
      pos_ = start;
      fail("integer out of range");
    }
    return v;
  }

  void expect_end() {
    skip_ws();
    if (!eof()) fail("unexpected trailing input" + found());
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, column(), message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(line_, column0_ + pos, message);
  }

  std::string found() const {
    if (eof()) return ", found end of input";
    return std::string(", found '") + peek() + "'";
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column0_;
};

}  // namespace ordcx::detail
