// Copyright 2026 The diagram-ops Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIAGRAM_OPS_SRC_TEXT_CURSOR_HPP_
#define DIAGRAM_OPS_SRC_TEXT_CURSOR_HPP_

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "diagram_ops/errors.hpp"
#include "diagram_ops/partition.hpp"
#include "diagram_ops/rational.hpp"

namespace diagram_ops::detail {

// Whitespace-insensitive scanner shared by the text parsers.
class TextCursor {
 public:
  explicit TextCursor(std::string_view text, std::size_t base = 0)
      : text_(text), base_(base) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  // Unsigned decimal integer.
  Integer integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  int small_int() {
    std::size_t start = position();
    Integer z = integer();
    if (z > 1000000) throw ParseError("integer out of range", start);
    return static_cast<int>(z.get_si());
  }

  // Optional '-', integer, optional '/' integer.
  Rational rational() {
    bool negative = consume('-');
    std::size_t start = position();
    Integer num = integer();
    Integer den = 1;
    if (consume('/')) {
      den = integer();
      if (den == 0) throw ParseError("zero denominator", start);
    }
    Rational q = make_rational(num, den);
    return negative ? Rational(-q) : q;
  }

  std::size_t position() const { return base_ + pos_; }
  std::size_t raw_pos() const { return pos_; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, position()); }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

// Reads one bracketed partition at the cursor.
Partition read_partition(TextCursor& cur);

}  // namespace diagram_ops::detail

#endif  // DIAGRAM_OPS_SRC_TEXT_CURSOR_HPP_
