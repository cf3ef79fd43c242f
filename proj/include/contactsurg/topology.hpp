#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contactsurg/integer.hpp"
#include "contactsurg/rational.hpp"
#include "contactsurg/surgery.hpp"

namespace contactsurg {

/// Seifert-framed coefficient tb + r of a contact r-surgery. Throws
/// InfiniteCoefficient for r = inf.
Rational smooth_coefficient(std::int64_t tb, const Rational& r);

/// Row i is q_i times the linking row of component i, with p_i on the
/// diagonal, where p_i/q_i is the smooth coefficient.
struct LinkingMatrix {
  std::vector<std::string> ids;
  IntMatrix matrix;
};

/// Throws InfiniteCoefficient or MissingLinkingData.
LinkingMatrix generalized_linking_matrix(const ContactDiagram& diagram);

template <typename Scalar>
struct SmithForm {
  MatX<Scalar> d;  // diagonal, d(i,i) | d(i+1,i+1), nonnegative
  MatX<Scalar> u;  // unimodular, u * m * v = d
  MatX<Scalar> v;  // unimodular
};

/// Smith normal form by elementary row and column operations, always
/// pivoting on the entry of least absolute value.
template <typename Scalar>
SmithForm<Scalar> smith_normal_form(const MatX<Scalar>& m) {
  using std::abs;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  SmithForm<Scalar> out{m, MatX<Scalar>::Identity(rows, rows), MatX<Scalar>::Identity(cols, cols)};
  MatX<Scalar>& a = out.d;

  // Row ops act on a and u from the left; column ops on a and v from the right.
  auto add_row = [&](Eigen::Index dst, Eigen::Index src, const Scalar& f) {
    a.row(dst) -= f * a.row(src);
    out.u.row(dst) -= f * out.u.row(src);
  };
  auto add_col = [&](Eigen::Index dst, Eigen::Index src, const Scalar& f) {
    a.col(dst) -= f * a.col(src);
    out.v.col(dst) -= f * out.v.col(src);
  };
  auto swap_rows = [&](Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    out.u.row(i).swap(out.u.row(j));
  };
  auto swap_cols = [&](Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a.col(i).swap(a.col(j));
    out.v.col(i).swap(out.v.col(j));
  };

  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Least nonzero |entry| in the trailing block becomes the pivot.
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < rows; ++i) {
        for (Eigen::Index j = t; j < cols; ++j) {
          if (a(i, j) != 0 && (pi < 0 || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) return out;
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        add_row(i, t, Scalar(a(i, t) / a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        add_col(j, t, Scalar(a(t, j) / a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i) {
        for (Eigen::Index j = t + 1; j < cols; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      add_row(t, bad, Scalar(-1));
    }
    if (a(t, t) < 0) {
      a.row(t) = (-a.row(t)).eval();
      out.u.row(t) = (-out.u.row(t)).eval();
    }
  }
  return out;
}

/// Finitely generated abelian group Z^free_rank + sum Z/d_i, d_1 | d_2 | ...
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // every entry >= 2

  /// Order when finite.
  std::optional<Integer> order() const;
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string str() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Cokernel of an integer matrix acting on column vectors.
AbelianGroup cokernel(const IntMatrix& m);

/// H1 of the surgered manifold, read off the input rational presentation.
AbelianGroup first_homology(const ContactDiagram& diagram);

}  // namespace contactsurg
