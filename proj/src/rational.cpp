#include "contactsurg/rational.hpp"

#include <cctype>
#include <limits>

#include "contactsurg/error.hpp"

namespace contactsurg {

std::int64_t to_int64(const Integer& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::Overflow, value.str() + " does not fit in 64 bits");
  }
  return value.convert_to<std::int64_t>();
}

Rational::Rational(Integer num, Integer den) {
  if (den == 0) {
    throw Error(ErrorKind::DivisionByZero, "zero denominator in " + num.str() + "/0");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Integer g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::infinity() { return Rational(Integer(1), Integer(0), Reduced{}); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  if (text == "inf") return infinity();
  const auto bad = [&](const char* why) {
    return Error(ErrorKind::ParseError, "malformed coefficient \"" + std::string(text) + "\": " + why);
  };
  std::string_view num_text = text;
  std::string_view den_text = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_text = text.substr(0, slash);
    den_text = text.substr(slash + 1);
  }
  std::string_view digits = num_text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) throw bad("numerator is not an integer");
  if (!all_digits(den_text)) throw bad("denominator is not a positive integer");
  Integer num{std::string(digits)};
  if (num_text.front() == '-') num = -num;
  Integer den{std::string(den_text)};
  if (den == 0) throw bad("zero denominator");
  return Rational(num, den);
}

void Rational::require_finite(const char* what) const {
  if (is_infinite()) throw Error(ErrorKind::InfiniteCoefficient, std::string(what) + " of inf");
}

int Rational::sign() const {
  require_finite("sign");
  return num_.sign();
}

Integer Rational::floor() const {
  require_finite("floor");
  Integer q = num_ / den_;  // truncates toward zero
  if (num_ < 0 && q * den_ != num_) q -= 1;
  return q;
}

Rational Rational::operator-() const {
  require_finite("negation");
  return Rational(-num_, den_, Reduced{});
}

Rational Rational::inverse() const {
  require_finite("inverse");
  return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  a.require_finite("sum");
  b.require_finite("sum");
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  a.require_finite("product");
  b.require_finite("product");
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

std::partial_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a == b ? std::partial_ordering::equivalent : std::partial_ordering::unordered;
  }
  Integer lhs = a.num_ * b.den_;
  Integer rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::partial_ordering::less;
  if (lhs > rhs) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::string Rational::str() const {
  if (is_infinite()) return "inf";
  if (is_integer()) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace contactsurg
