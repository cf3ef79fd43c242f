#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace contactsurg {

/// Arbitrary-precision integer used for every certificate quantity.
using Integer = boost::multiprecision::mpz_int;

template <typename Scalar>
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// 2x2 integer matrix; columns are the images of the (mu, lambda) basis.
using IntMat2 = Mat2<Integer>;
using IntVec2 = Vec2<Integer>;
using IntMatrix = MatX<Integer>;

/// Narrow to int64, raising ErrorKind::Overflow instead of wrapping.
std::int64_t to_int64(const Integer& value);

inline std::string to_string(const Integer& value) { return value.str(); }

template <typename Scalar>
Scalar det(const Mat2<Scalar>& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

inline IntMat2 make_mat2(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
  IntMat2 m;
  m << a, b, c, d;
  return m;
}

}  // namespace contactsurg
