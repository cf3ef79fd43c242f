#include "contactsurg/curve.hpp"

#include "contactsurg/error.hpp"

namespace contactsurg {

Curve::Curve(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
  if (gcd(p_, q_) != 1) {
    throw Error(ErrorKind::BadEntry, "curve (" + p_.str() + ", " + q_.str() + ") is not primitive");
  }
}

Rational Curve::slope() const {
  if (p_ == 0) return Rational::infinity();
  return Rational(q_, p_);
}

Curve mobius_curve(const IntMat2& m, const Curve& c) {
  const Integer d = det(m);
  if (abs(d) != 1) throw Error(ErrorKind::SingularMatrix, "determinant " + d.str());
  IntVec2 image = m * IntVec2(c.p(), c.q());
  return Curve(image(0), image(1));
}

}  // namespace contactsurg
