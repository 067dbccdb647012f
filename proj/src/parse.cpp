#include "fockalg/parse.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

namespace fockalg {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  OpExpr run() {
    OpExpr e = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) throw ParseError(pos_, "trailing input");
    return e;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* ctx) {
    if (!consume(c)) throw ParseError(pos_, std::string("expected '") + c + "' " + ctx);
  }

  OpExpr parse_expr() {
    OpExpr left = parse_term();
    while (true) {
      skip_ws();
      std::size_t mark = pos_;
      if (consume('+')) {
        left = OpExpr::sum({left, parse_term()});
      } else if (consume('-')) {
        left = OpExpr::sum(
            {left, OpExpr::prod({OpExpr::scalar(Complex(-1.0, 0.0)), parse_term()})});
      } else {
        pos_ = mark;
        return left;
      }
    }
  }

  OpExpr parse_term() {
    OpExpr left = parse_factor();
    while (consume('*')) left = OpExpr::prod({left, parse_factor()});
    return left;
  }

  OpExpr parse_factor() {
    OpExpr base = parse_atom();
    if (consume('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ == start) throw ParseError(pos_, "expected non-negative integer exponent");
      int k = 0;
      std::from_chars(src_.data() + start, src_.data() + pos_, k);
      return OpExpr::pow(base, k);
    }
    return base;
  }

  OpExpr parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      OpExpr inner = parse_expr();
      expect(')', "to close group");
      return inner;
    }
    if (c == '[') {
      ++pos_;
      OpExpr lhs = parse_expr();
      expect(',', "between commutator arguments");
      OpExpr rhs = parse_expr();
      expect(']', "to close commutator");
      return OpExpr::commutator(lhs, rhs);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_word();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '+' || c == '-')
      return parse_complex();
    throw ParseError(pos_, "expected expression");
  }

  OpExpr parse_word() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    std::string_view word = src_.substr(start, pos_ - start);
    if (word == "a") {
      // unicode dagger alias: a†
      if (src_.substr(pos_, 3) == "\xe2\x80\xa0") {
        pos_ += 3;
        return OpExpr::ad();
      }
      return OpExpr::a();
    }
    if (word == "ad") return OpExpr::ad();
    if (word == "q") return OpExpr::position();
    if (word == "p") return OpExpr::momentum();
    throw ParseError(start, "unknown atom '" + std::string(word) + "'");
  }

  std::optional<double> try_decimal() {
    skip_ws();
    std::size_t start = pos_;
    std::size_t i = pos_;
    if (i < src_.size() && (src_[i] == '+' || src_[i] == '-')) ++i;
    std::size_t digits_from = i;
    while (i < src_.size() &&
           (std::isdigit(static_cast<unsigned char>(src_[i])) || src_[i] == '.'))
      ++i;
    if (i == digits_from) return std::nullopt;
    if (i < src_.size() && (src_[i] == 'e' || src_[i] == 'E')) {
      std::size_t j = i + 1;
      if (j < src_.size() && (src_[j] == '+' || src_[j] == '-')) ++j;
      std::size_t exp_from = j;
      while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
      if (j > exp_from) i = j;
    }
    double value = 0.0;
    auto first = src_.data() + start;
    auto res = std::from_chars(first, src_.data() + i, value);
    if (res.ec != std::errc()) return std::nullopt;
    pos_ = start + static_cast<std::size_t>(res.ptr - first);
    return value;
  }

  OpExpr parse_complex() {
    std::size_t start = pos_;
    auto re = try_decimal();
    if (!re) throw ParseError(start, "expected number");
    // pure imaginary shorthand "2i"
    if (pos_ < src_.size() && src_[pos_] == 'i') {
      ++pos_;
      return OpExpr::scalar(Complex(0.0, *re));
    }
    std::size_t mark = pos_;
    skip_ws();
    if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
      double sign = src_[pos_] == '-' ? -1.0 : 1.0;
      ++pos_;
      auto im = try_decimal();
      if (im) {
        skip_ws();
        bool has_i = pos_ < src_.size() && src_[pos_] == 'i' &&
                     (pos_ + 1 == src_.size() ||
                      !std::isalpha(static_cast<unsigned char>(src_[pos_ + 1])));
        if (has_i) {
          ++pos_;
          return OpExpr::scalar(Complex(*re, sign * *im));
        }
      }
    }
    pos_ = mark;  // plain real; the sign belonged to the enclosing sum
    return OpExpr::scalar(Complex(*re, 0.0));
  }
};

}  // namespace

OpExpr parse(std::string_view src) { return Parser(src).run(); }

}  // namespace fockalg
