#include "contactsurg/continued_fraction.hpp"

#include <algorithm>

#include "contactsurg/error.hpp"

namespace contactsurg {

NegCF::NegCF(std::vector<Integer> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorKind::BadEntry, "empty continued fraction");
  if (entries_.front() > -1) {
    throw Error(ErrorKind::BadEntry, "first entry " + entries_.front().str() + " > -1");
  }
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i] > -2) {
      throw Error(ErrorKind::BadEntry, "entry " + std::to_string(i + 1) + " is " + entries_[i].str() + " > -2");
    }
  }
}

NegCF NegCF::from_surgery_coefficients(std::span<const Integer> rs) {
  require_chain_entries(rs);
  std::vector<Integer> entries(rs.begin(), rs.end());
  entries.front() += 1;
  return NegCF(std::move(entries));
}

std::vector<Integer> NegCF::surgery_coefficients() const {
  std::vector<Integer> rs = entries_;
  rs.front() -= 1;
  return rs;
}

NegCF neg_cf_expand(const Rational& r) {
  if (r.is_infinite() || r.sign() >= 0) {
    throw Error(ErrorKind::NonNegativeCoefficient, "expansion needs r < 0, got " + r.str());
  }
  // Each remainder -1/(x - a) has a strictly smaller denominator, so this
  // terminates; every remainder is < -1, which forces later entries <= -2.
  std::vector<Integer> entries;
  Rational x = r;
  for (;;) {
    Integer a = x.floor();
    entries.push_back(a);
    if (x.is_integer()) break;
    x = Rational(-1) / (x - Rational(a));
  }
  return NegCF(std::move(entries));
}

Rational cf_eval(std::span<const Integer> entries) {
  if (entries.empty()) throw Error(ErrorKind::BadEntry, "empty continued fraction");
  Rational value(entries.back());
  for (auto it = entries.rbegin() + 1; it != entries.rend(); ++it) {
    if (value.sign() == 0) throw Error(ErrorKind::DivisionByZero, "inner tail evaluates to 0");
    value = Rational(*it) - value.inverse();
  }
  return value;
}

IntMat2 gluing_matrix(const Integer& r) { return make_mat2(-r, 1, -1, 0); }

IntMat2 framing_shift() { return make_mat2(1, 1, 0, 1); }

IntMat2 twist_matrix(const Integer& k) { return make_mat2(1, 0, k, 1); }

void require_chain_entries(std::span<const Integer> rs) {
  if (rs.empty()) throw Error(ErrorKind::BadEntry, "empty chain");
  for (const auto& r : rs) {
    if (r > -2) throw Error(ErrorKind::BadEntry, "chain entry " + r.str() + " > -2");
  }
}

namespace {

IntMat2 gluing_product(std::span<const Integer> rs) {
  IntMat2 product = IntMat2::Identity();
  for (const auto& r : rs) product = (product * gluing_matrix(r)).eval();
  return product;
}

}  // namespace

IntMat2 chain_matrix(std::span<const Integer> rs) {
  require_chain_entries(rs);
  return framing_shift() * gluing_product(rs);
}

Rational boundary_slope(std::span<const Integer> rs) {
  require_chain_entries(rs);
  const IntMat2 g = gluing_product(rs);
  // det g = 1, so the adjugate is the inverse.
  IntMat2 inv;
  inv << g(1, 1), -g(0, 1), -g(1, 0), g(0, 0);
  IntVec2 rhs(Integer(-1), Integer(1));
  IntVec2 xy = inv * rhs;
  if (xy(0) == 0) return Rational::infinity();
  return Rational(xy(1), xy(0));
}

Rational truncated_slope(std::span<const Integer> rs) {
  require_chain_entries(rs);
  auto first_deep = std::find_if(rs.begin(), rs.end(), [](const Integer& r) { return r < -2; });
  if (first_deep == rs.end()) return Rational(-1);
  std::vector<Integer> reversed(std::make_reverse_iterator(rs.end()),
                                std::make_reverse_iterator(first_deep + 1));
  reversed.push_back(*first_deep + 1);
  return cf_eval(reversed);
}

Integer tight_count(std::span<const Integer> rs) {
  require_chain_entries(rs);
  Integer count = 1;
  for (const auto& r : rs) count *= abs(r + 1);
  return count;
}

}  // namespace contactsurg
