#include <algorithm>

#include "contactsurg/surgery.hpp"

namespace contactsurg {

namespace {

constexpr const char* kReplacementLemma = "assumed replacement lemma";

// Runs one clause; any exception from tampered data counts as a failure.
template <typename Check>
Clause run(std::string name, Check&& check) {
  try {
    return {std::move(name), static_cast<bool>(check())};
  } catch (const std::exception&) {
    return {std::move(name), false};
  }
}

bool entries_in_range(const std::vector<Integer>& cf) {
  if (cf.empty() || cf.front() > -1) return false;
  return std::all_of(cf.begin() + 1, cf.end(), [](const Integer& a) { return a <= -2; });
}

std::vector<Integer> shifted(const std::vector<Integer>& cf) {
  std::vector<Integer> rs = cf;
  rs.front() -= 1;
  return rs;
}

// Independent re-derivation of the chain matrix as a plain product.
IntMat2 product_of_gluings(const std::vector<Integer>& rs) {
  IntMat2 m = make_mat2(1, 1, 0, 1);
  for (const auto& r : rs) m = (m * make_mat2(-r, 1, -1, 0)).eval();
  return m;
}

// (1 0; 1 1)^k by repeated squaring, compared against (1 0; k 1).
bool is_power_of_unit_twist(const Integer& k) {
  if (k < 0) return false;
  IntMat2 acc = IntMat2::Identity();
  IntMat2 base = make_mat2(1, 0, 1, 1);
  for (Integer e = k; e > 0; e >>= 1) {
    if ((e & 1) != 0) acc = (acc * base).eval();
    base = (base * base).eval();
  }
  return acc == twist_matrix(k);
}

// Size of the allowed rotation set, listed explicitly unless it is too
// large to materialize.
Integer choice_count(std::int64_t tb) {
  if (tb > -1) return 0;
  if (tb < -(std::int64_t{1} << 20)) return Integer(-tb);
  return allowed_rotations(tb).size();
}

}  // namespace

std::vector<Clause> derive_clauses(const ChainConversion& chain) {
  std::vector<Clause> out;
  if (!chain.certificate) return out;
  const ConversionCertificate& c = *chain.certificate;
  const bool positive = c.coefficient.is_finite() && c.coefficient.sign() > 0;

  out.push_back(run("coefficient_binding", [&] { return c.coefficient == chain.coefficient; }));
  out.push_back(run("cf_bounds", [&] { return entries_in_range(c.cf); }));
  out.push_back(run("cf_canonical", [&] { return neg_cf_expand(c.target).entries() == c.cf; }));
  out.push_back(run("cf_eval_matches_target", [&] { return cf_eval(c.cf) == c.target; }));
  out.push_back(run("target_matches_coefficient", [&] {
    if (c.target.is_infinite() || c.target.sign() >= 0) return false;
    if (!positive) return c.target == c.coefficient;
    const Integer& p = c.coefficient.num();
    const Integer& q = c.coefficient.den();
    return c.target == Rational(p, q - c.k * p);
  }));
  out.push_back(run("chain_matrix_recomputed", [&] { return c.product == product_of_gluings(shifted(c.cf)); }));
  out.push_back(run("chain_det_one", [&] { return det(c.product) == 1; }));
  out.push_back(run("chain_column_ratio", [&] { return Rational(c.product(0, 0), c.product(1, 0)) == c.target; }));
  out.push_back(run("boundary_slope_solve", [&] { return c.slope == boundary_slope(shifted(c.cf)); }));
  out.push_back(run("boundary_slope_reversed_cf", [&] {
    auto rev = shifted(c.cf);
    rev.front() += 1;
    std::reverse(rev.begin(), rev.end());
    return c.slope == cf_eval(rev);
  }));
  out.push_back(run("truncation_identity", [&] { return c.slope == truncated_slope(shifted(c.cf)); }));
  out.push_back(run("tight_count_formula", [&] { return c.tight_count == tight_count(shifted(c.cf)); }));

  // Chain members: one (-1) per entry with tb = ri + 1, after k push-offs.
  const auto& ins = chain.instructions;
  out.push_back(run("chain_instructions", [&] {
    const auto rs = shifted(c.cf);
    const auto offset = static_cast<std::size_t>(to_int64(c.k));
    if (ins.size() != offset + rs.size()) return false;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const auto& m = ins[offset + i];
      if (m.coefficient != -1 || m.level != offset + i || m.provenance != Provenance::RationalChain) return false;
      if (m.parent != chain.parent || m.tb_local != to_int64(rs[i] + 1)) return false;
      if (!rotation_allowed(m.tb_local, m.rot)) return false;
    }
    return true;
  }));
  out.push_back(run("count_equals_choices", [&] {
    Integer choices = 1;
    for (const auto& r : shifted(c.cf)) choices *= choice_count(to_int64(r + 1));
    return choices == c.tight_count;
  }));

  if (!positive) {
    out.push_back(run("no_twist", [&] { return c.k == 0 && !c.composite; }));
    return out;
  }

  const Integer& p = c.coefficient.num();
  const Integer& q = c.coefficient.den();
  out.push_back(run("twist_minimal_k", [&] { return c.k >= 1 && q - c.k * p < 0 && q - (c.k - 1) * p >= 0; }));
  out.push_back(run("twist_identity", [&] {
    if (!c.composite) return false;
    IntMat2 oriented = c.product;
    if (oriented(0, 0) < 0) oriented = (-oriented).eval();
    const IntMat2 expected = make_mat2(1, 0, c.k, 1) * oriented;
    return *c.composite == expected && oriented(0, 0) == p && oriented(1, 0) == q - c.k * p;
  }));
  out.push_back(run("twist_column", [&] {
    return c.composite && (*c.composite)(0, 0) == p && (*c.composite)(1, 0) == q && det(*c.composite) == 1;
  }));
  out.push_back(run("push_off_instructions", [&] {
    const auto k = static_cast<std::size_t>(to_int64(c.k));
    if (ins.size() < k) return false;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& m = ins[i];
      if (m.coefficient != 1 || m.level != i || m.tb_local != -1 || m.rot != 0 ||
          m.provenance != Provenance::PushOff || m.parent != chain.parent) {
        return false;
      }
    }
    return true;
  }));
  if (c.k >= 2) out.push_back(run(kReplacementLemma, [&] { return is_power_of_unit_twist(c.k); }));
  return out;
}

bool VerifyReport::passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.passed; });
}

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return !c.passed; }));
}

VerifyReport verify(const PmOneDiagram& diagram) {
  VerifyReport report;
  auto add = [&](const std::string& parent, std::string clause, bool passed, std::string detail = {}) {
    report.clauses.push_back({parent, std::move(clause), passed, std::move(detail)});
  };

  for (const auto& chain : diagram.chains) {
    const Rational& r = chain.coefficient;
    const bool target_form = !chain.instructions.empty() &&
                             std::all_of(chain.instructions.begin(), chain.instructions.end(), [](const auto& i) {
                               return i.coefficient == 1 || i.coefficient == -1;
                             });
    add(chain.parent, "target_form", target_form);
    add(chain.parent, "parent_binding",
        std::all_of(chain.instructions.begin(), chain.instructions.end(),
                    [&](const auto& i) { return i.parent == chain.parent; }));

    if (r.is_infinite()) {
      add(chain.parent, "dispatch", false, "inf components must be dropped, not converted");
      continue;
    }
    if (r.sign() == 0 || r == Rational(1) || r == Rational(-1)) {
      const bool single = chain.instructions.size() == 1 && !chain.certificate;
      bool ok = single;
      if (single) {
        const auto& ins = chain.instructions.front();
        ok = r.sign() == 0 ? (ins.coefficient == 1 && ins.provenance == Provenance::ZeroSurgery)
                           : (ins.coefficient == r.sign() && ins.provenance == Provenance::Passthrough);
      }
      add(chain.parent, r.sign() == 0 ? "zero_surgery" : "passthrough", ok);
      continue;
    }
    if (!chain.certificate) {
      add(chain.parent, "certificate_present", false);
      continue;
    }

    const auto derived = derive_clauses(chain);
    for (const auto& clause : derived) add(chain.parent, clause.name, clause.passed);
    add(chain.parent, "recorded_clauses_consistent", chain.certificate->identity_check == derived,
        "recorded clause table must equal the re-derived one");
  }
  return report;
}

}  // namespace contactsurg
