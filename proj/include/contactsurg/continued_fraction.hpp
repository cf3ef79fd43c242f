#pragma once

#include <span>
#include <vector>

#include "contactsurg/integer.hpp"
#include "contactsurg/rational.hpp"

namespace contactsurg {

/// Negative continued fraction [a1, ..., an] = a1 - 1/(a2 - 1/(... - 1/an))
/// with a1 <= -1 and ai <= -2 for i >= 2.
///
/// The surgery-coefficient view shifts the first entry: r1 = a1 - 1 and
/// ri = ai otherwise, so that every ri <= -2.
class NegCF {
 public:
  /// Throws BadEntry if the entries violate the bounds or are empty.
  explicit NegCF(std::vector<Integer> entries);

  static NegCF from_surgery_coefficients(std::span<const Integer> rs);

  const std::vector<Integer>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// [a1 - 1, a2, ..., an]
  std::vector<Integer> surgery_coefficients() const;

  friend bool operator==(const NegCF&, const NegCF&) = default;

 private:
  std::vector<Integer> entries_;
};

/// Canonical expansion of r < 0: a = r if r is an integer, else floor(r);
/// continue with -1/(r - a). Throws NonNegativeCoefficient for r >= 0 or inf.
NegCF neg_cf_expand(const Rational& r);

/// a1 - 1/(a2 - 1/(... - 1/an)) for any nonempty integer list. Throws
/// DivisionByZero if an inner tail evaluates to 0.
Rational cf_eval(std::span<const Integer> entries);

/// (-r 1; -1 0): gluing of the level-i solid torus after (-1)-surgery on a
/// knot with tb = r + 1 in local coordinates.
IntMat2 gluing_matrix(const Integer& r);

/// (1 1; 0 1): identification of the framing-shifted neighbourhood with nu K.
IntMat2 framing_shift();

/// (1 0; k 1): gluing map of contact (1/k)-surgery.
IntMat2 twist_matrix(const Integer& k);

/// (1 1; 0 1) * prod (-ri 1; -1 0). Throws BadEntry unless every ri <= -2.
IntMat2 chain_matrix(std::span<const Integer> rs);

/// Slope y/x of the boundary dividing set after the chain of (-1)-surgeries,
/// where prod (-ri 1; -1 0) (x, y)^T = (-1, 1)^T.
Rational boundary_slope(std::span<const Integer> rs);

/// [rn, ..., r(k+1), rk + 1] with k the first index where rk < -2, or -1
/// when every entry equals -2.
Rational truncated_slope(std::span<const Integer> rs);

/// |(rn + 1) ... (r1 + 1)|: number of tight structures on the solid torus
/// with the boundary produced by the chain.
Integer tight_count(std::span<const Integer> rs);

/// Throws BadEntry unless the list is nonempty and every entry is <= -2.
void require_chain_entries(std::span<const Integer> rs);

}  // namespace contactsurg
