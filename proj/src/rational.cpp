// SPDX-License-Identifier: Apache-2.0
#include "ergodic/rational.hpp"

#include <cctype>

namespace ergodic {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s))
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part[0] == '-';
    std::string digits(int_part);
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    if (frac_part.empty() || !is_integer_literal(frac_part) || frac_part[0] == '-' || frac_part[0] == '+')
      throw ParseError("malformed rational '" + std::string(text) + "'");
    Integer whole = parse_integer(digits, text);
    Integer frac{std::string(frac_part)};
    Integer scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    Rational magnitude = Rational(abs(whole)) + Rational(frac, scale);
    return negative ? -magnitude : magnitude;
  }
  return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

const Rational& Extended::value() const {
  if (!value_) throw DomainError("extended value is infinite");
  return *value_;
}

Extended operator+(const Extended& a, const Extended& b) {
  if (a.is_infinite() || b.is_infinite()) return Extended::infinity();
  return Extended(*a.value_ + *b.value_);
}

Extended operator*(const Extended& a, const Rational& scale) {
  if (scale == 0) return Extended(Rational(0));
  if (a.is_infinite()) return Extended::infinity();
  return Extended(*a.value_ * scale);
}

bool operator==(const Extended& a, const Extended& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const Extended& a, const Extended& b) {
  if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
  if (a.is_infinite()) return std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  if (*a.value_ < *b.value_) return std::strong_ordering::less;
  if (*a.value_ > *b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const Extended& e) {
  return e.is_infinite() ? std::string("inf") : to_string(e.value());
}

}  // namespace ergodic
