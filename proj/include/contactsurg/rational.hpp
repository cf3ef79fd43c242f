#pragma once

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include "contactsurg/integer.hpp"

namespace contactsurg {

/// Exact rational number extended by a single point at infinity.
///
/// Finite values are always stored reduced with a positive denominator, so
/// structural equality is numeric equality. Infinity is a tagged value
/// (stored as 1/0) that compares equal only to itself and is unordered
/// against finite values. Arithmetic involving infinity raises
/// ErrorKind::InfiniteCoefficient.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(const Integer& n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  Rational(T n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)

  /// Throws DivisionByZero when den == 0.
  Rational(Integer num, Integer den);

  static Rational infinity();

  /// Accepts "p/q", "n" and "inf"; the denominator must be a positive
  /// decimal literal. Anything else raises ErrorKind::ParseError.
  static Rational parse(std::string_view text);

  bool is_infinite() const { return den_ == 0; }
  bool is_finite() const { return den_ != 0; }
  bool is_integer() const { return den_ == 1; }

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  /// -1, 0 or +1. Infinity has no sign.
  int sign() const;
  Integer floor() const;

  Rational operator-() const;
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::partial_ordering operator<=>(const Rational& a, const Rational& b);

  std::string str() const;

 private:
  struct Reduced {};
  Rational(Integer num, Integer den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  void require_finite(const char* what) const;

  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace contactsurg
