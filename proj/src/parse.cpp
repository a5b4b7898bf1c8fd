#include <cctype>

#include "sdb/errors.hpp"
#include "sdb/scalar.hpp"

namespace sdb {

namespace {

constexpr std::uint32_t max_exponent = 1000;

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const Field& field) : text_(text), field_(field) {}

  Scalar parse() {
    Scalar value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar value = term();
    while (true) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  Scalar term() {
    Scalar value = factor();
    while (true) {
      if (accept('*')) {
        value *= factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Scalar divisor = factor();
        if (divisor.is_zero()) throw parse_error("division by zero", at);
        value = value / divisor;
      } else {
        return value;
      }
    }
  }

  Scalar factor() {
    Scalar base = atom();
    if (accept('^')) {
      skip_space();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected a nonnegative integer exponent");
      }
      const mpz_class e = digits();
      if (e > max_exponent) fail("exponent larger than " + std::to_string(max_exponent));
      return base.pow(static_cast<std::uint32_t>(e.get_ui()));
    }
    return base;
  }

  Scalar atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Scalar::from_integer(field_, digits());
    if (c >= 'a' && c <= 'z') return variable();
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  mpz_class digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Scalar variable() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
                                   std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
      ++pos_;
    }
    const std::string name(text_.substr(start, pos_ - start));
    const auto& vars = field_.vars();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == name) return Scalar::variable(field_, i);
    }
    throw parse_error("unknown variable '" + name + "' in " + field_.describe(), start);
  }

  std::string_view text_;
  const Field& field_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const Field& field) { return ExpressionParser(text, field).parse(); }

}  // namespace sdb
