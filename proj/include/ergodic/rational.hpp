// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ergodic {

/// Arbitrary-precision rational in lowest terms (GMP backed).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class RepresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p/q", "p" or a decimal literal such as "0.25". Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise, q > 0, lowest terms.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

Rational abs(const Rational& r);

/// Nonnegative value on the extended half-line [0, ∞].
class Extended {
 public:
  Extended() = default;
  Extended(Rational value) : value_(std::move(value)) {}  // NOLINT(implicit)
  Extended(int value) : value_(Rational(value)) {}        // NOLINT(implicit)

  static Extended infinity() {
    Extended e;
    e.value_.reset();
    return e;
  }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  /// Throws DomainError when infinite.
  const Rational& value() const;

  friend Extended operator+(const Extended& a, const Extended& b);
  friend Extended operator*(const Extended& a, const Rational& scale);
  friend bool operator==(const Extended& a, const Extended& b);
  friend std::strong_ordering operator<=>(const Extended& a, const Extended& b);

 private:
  std::optional<Rational> value_ = Rational(0);
};

/// "inf" or the canonical rational text.
std::string to_string(const Extended& e);


}  // namespace ergodic
