#pragma once

#include "contactsurg/integer.hpp"
#include "contactsurg/rational.hpp"

namespace contactsurg {

/// Primitive class p*mu + q*lambda on a boundary torus.
class Curve {
 public:
  /// Throws BadEntry unless gcd(|p|, |q|) = 1.
  Curve(Integer p, Integer q);

  static Curve meridian() { return Curve(1, 0); }
  static Curve longitude() { return Curve(0, 1); }

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }

  /// q/p; the meridian has slope 0 and the longitude slope inf.
  Rational slope() const;

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  Integer p_;
  Integer q_;
};

/// Image of c under M acting on column vectors (p, q). Throws
/// SingularMatrix unless det M = +-1.
Curve mobius_curve(const IntMat2& m, const Curve& c);

}  // namespace contactsurg
