// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "contactsurg/commands.hpp"
#include "contactsurg/continued_fraction.hpp"
#include "contactsurg/diagram_io.hpp"
#include "contactsurg/front.hpp"
#include "contactsurg/surgery.hpp"
#include "contactsurg/topology.hpp"
#include "oracles.hpp"
#include "tamper.hpp"

using namespace contactsurg;

namespace {

struct Failure {
  std::string what;
};

#define CHECK(cond, msg)                          \
  do {                                            \
    if (!(cond)) {                                \
      std::ostringstream os_;                     \
      os_ << msg;                                 \
      throw Failure{os_.str()};                   \
    }                                             \
  } while (0)

using i64 = oracle::i64;

std::vector<i64> small(const std::vector<Integer>& xs) {
  std::vector<i64> out;
  for (const auto& x : xs) out.push_back(to_int64(x));
  return out;
}

Rational frac(i64 p, i64 q) { return Rational(Integer(p), Integer(q)); }

DiagramComponent unknot(const std::string& id, const Rational& r) {
  return {id, LegendrianKnotData{-1, 0, "unknot"}, r, {}};
}

// --- 1 ----------------------------------------------------------------------

std::string cf_soundness() {
  std::size_t cases = 0;
  for (i64 q = 1; q <= 200; ++q) {
    for (i64 p = -200; p <= -1; ++p) {
      if (std::gcd(-p, q) != 1) continue;
      ++cases;
      const Rational r = frac(p, q);
      const NegCF cf = neg_cf_expand(r);
      const auto a = small(cf.entries());
      CHECK(a.front() <= -1, p << "/" << q << ": a1 = " << a.front());
      for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i] <= -2, p << "/" << q << ": a" << i + 1 << " = " << a[i]);
      CHECK(cf_eval(cf.entries()) == r, p << "/" << q << ": cf_eval mismatch");
      const auto o = oracle::eval_cf(a);
      CHECK(o && o->num == p && o->den == q, p << "/" << q << ": oracle evaluation mismatch");

      const IntMat2 m = chain_matrix(cf.surgery_coefficients());
      CHECK(det(m) == 1, p << "/" << q << ": det " << m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
      CHECK(Rational(m(0, 0), m(1, 0)) == r, p << "/" << q << ": column ratio");
      const auto naive = oracle::chain_product(small(cf.surgery_coefficients()));
      CHECK(m == make_mat2(naive[0], naive[1], naive[2], naive[3]), p << "/" << q << ": chain product mismatch");
    }
  }
  return std::to_string(cases) + " cases";
}

// --- 2 ----------------------------------------------------------------------

std::string slope_duality() {
  std::size_t cases = 0, all_twos = 0;
  for (i64 q = 1; q <= 200; ++q) {
    for (i64 p = -200; p <= -1; ++p) {
      if (std::gcd(-p, q) != 1) continue;
      ++cases;
      const auto rs = neg_cf_expand(frac(p, q)).surgery_coefficients();
      const Rational slope = boundary_slope(rs);

      std::vector<Integer> rev(rs.rbegin(), rs.rend());
      rev.back() += 1;
      CHECK(slope == cf_eval(rev), p << "/" << q << ": reversed cf " << cf_eval(rev) << " != " << slope);
      CHECK(slope == truncated_slope(rs), p << "/" << q << ": truncation " << truncated_slope(rs) << " != " << slope);

      // Independent check: (x, y) = (den, num) up to sign solves the system.
      const auto g = oracle::chain_product(small(rs), false);
      const i64 x = to_int64(slope.den()), y = to_int64(slope.num());
      const i64 u = g[0] * x + g[1] * y, v = g[2] * x + g[3] * y;
      CHECK((u == -1 && v == 1) || (u == 1 && v == -1), p << "/" << q << ": slope does not solve the system");

      const bool twos = std::all_of(rs.begin(), rs.end(), [](const Integer& r) { return r == -2; });
      if (twos) {
        ++all_twos;
        CHECK(slope == Rational(-1), p << "/" << q << ": all -2 chain has slope " << slope);
      }
    }
  }
  CHECK(all_twos == 200, "expected 200 all-(-2) expansions, saw " << all_twos);
  return std::to_string(cases) + " cases, " + std::to_string(all_twos) + " all-(-2)";
}

// --- 3 ----------------------------------------------------------------------

std::string count_equals_enumeration() {
  std::size_t cases = 0, diagrams = 0;
  for (i64 q = 1; q <= 12; ++q) {
    for (i64 p = -50 * q; p <= -1; ++p) {
      if (std::gcd(-p, q) != 1) continue;
      ++cases;
      const Rational r = frac(p, q);
      const auto rs = neg_cf_expand(r).surgery_coefficients();
      i64 product = 1;
      for (const auto& x : rs) product *= to_int64(x + 1);
      const i64 formula = product < 0 ? -product : product;
      CHECK(tight_count(rs) == formula, p << "/" << q << ": tight_count " << tight_count(rs) << " != " << formula);
      CHECK(oracle::count_rotation_tuples(small(rs)) == formula, p << "/" << q << ": rotation scan disagrees");

      std::set<std::vector<i64>> tuples;
      const std::size_t n = enumerate_conversions(ContactDiagram{{unknot("K", r)}}, [&](const PmOneDiagram& pm) {
        std::vector<i64> t;
        for (const auto& ins : pm.chains.at(0).instructions) t.push_back(ins.rot);
        tuples.insert(t);
        return true;
      });
      diagrams += n;
      CHECK(static_cast<i64>(n) == formula, p << "/" << q << ": enumerated " << n << ", expected " << formula);
      CHECK(tuples.size() == n, p << "/" << q << ": duplicate choice tuples");
    }
  }
  return std::to_string(cases) + " coefficients, " + std::to_string(diagrams) + " diagrams";
}

// --- 4 ----------------------------------------------------------------------

std::string dispatch_conformance() {
  for (i64 n = -20; n <= 20; ++n) {
    const PmOneDiagram out = convert(ContactDiagram{{unknot("K", Rational(n))}});
    CHECK(verify(out).passed(), "n = " << n << ": verify failed");
    CHECK(out.chains.size() == 1, "n = " << n << ": expected one chain");
    const auto& xs = out.chains[0].instructions;
    if (n <= -1) {
      CHECK(xs.size() == 1 && xs[0].coefficient == -1, "n = " << n << ": expected a single (-1)-instruction");
      CHECK(xs[0].tb_local == n, "n = " << n << ": tb_local " << xs[0].tb_local);
    } else if (n == 0) {
      CHECK(xs.size() == 1 && xs[0].coefficient == 1, "n = 0: expected a single (+1)-instruction");
    } else if (n == 1) {
      CHECK(xs.size() == 1 && xs[0].coefficient == 1, "n = 1: expected passthrough");
    } else {
      CHECK(xs.size() >= 2 && xs[0].coefficient == 1, "n = " << n << ": expected a leading (+1)");
      const auto& cert = *out.chains[0].certificate;
      CHECK(cert.k == 1 && cert.target == frac(n, 1 - n), "n = " << n << ": target " << cert.target);
      const auto chain = convert_negative("K", frac(n, 1 - n));
      CHECK(xs.size() == chain.instructions.size() + 1, "n = " << n << ": chain length");
      for (std::size_t i = 0; i < chain.instructions.size(); ++i) {
        auto expected = chain.instructions[i];
        expected.level += 1;
        CHECK(xs[i + 1] == expected, "n = " << n << ": chain member " << i);
      }
    }
  }
  const PmOneDiagram inf = convert(ContactDiagram{{unknot("K", Rational::infinity())}});
  CHECK(inf.chains.empty() && inf.dropped == std::vector<std::string>{"K"}, "inf: component not dropped");
  return "n in [-20, 20], 0 and inf";
}

// --- 5 ----------------------------------------------------------------------

std::string lutz_counts() {
  const auto simple = lutz_simple("K");
  const auto full = lutz_full("K");
  auto plus = [](const std::vector<PmOneInstruction>& xs) {
    return std::count_if(xs.begin(), xs.end(), [](const auto& x) { return x.coefficient == 1; });
  };
  CHECK(simple.size() == 2 && plus(simple) == 2, "lutz_simple emitted " << simple.size());
  CHECK(full.size() == 4 && plus(full) == 4, "lutz_full emitted " << full.size());
  return "2 and 4";
}

// --- 6 ----------------------------------------------------------------------

std::string front_invariants() {
  const OrientedFront k0 = standard_unknot();
  CHECK(thurston_bennequin(k0, 0) == -1 && rotation(k0, 0) == 0, "K0 invariants");

  std::vector<OrientedFront> corpus{k0};
  for (int n = 1; n <= 6; ++n) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      OrientedFront f = k0;
      int plus = 0;
      for (int i = 0; i < n; ++i) {
        const bool positive = (mask >> i) & 1;
        plus += positive;
        f = stabilize(f, 0, positive ? StabilizationSign::Positive : StabilizationSign::Negative);
      }
      CHECK(validate(f.word()) == 1, "sequence " << mask << " of length " << n << " does not validate");
      CHECK(thurston_bennequin(f, 0) == -1 - n, "tb after sequence " << mask << "/" << n);
      CHECK(rotation(f, 0) == plus - (n - plus), "rot after sequence " << mask << "/" << n);
      corpus.push_back(f);
    }
  }

  for (i64 n = 0; n <= 10; ++n) {
    for (i64 rot = -n - 2; rot <= n + 2; ++rot) {
      const bool allowed = rot >= -n && rot <= n && (n - rot) % 2 == 0;
      bool ok = false;
      try {
        const OrientedFront f = realize_unknot(-n - 1, rot);
        ok = true;
        CHECK(validate(f.word()) == 1, "realize_unknot(" << -n - 1 << ", " << rot << ") does not validate");
        CHECK(thurston_bennequin(f, 0) == -n - 1 && rotation(f, 0) == rot,
              "realize_unknot(" << -n - 1 << ", " << rot << ") re-verification");
        corpus.push_back(f);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnrealizablePair, "unexpected error " << e.what());
      }
      CHECK(ok == allowed, "realize_unknot(" << -n - 1 << ", " << rot << ") " << (ok ? "succeeded" : "failed"));
    }
  }

  for (const auto& f : corpus) {
    const auto tb = thurston_bennequin(f, 0), rot = rotation(f, 0);
    CHECK(tb + std::abs(rot) <= -1, "Bennequin violated on " << to_string(f.word()));
    const OrientedFront g = f.with_reversed(0);
    CHECK(thurston_bennequin(g, 0) == tb && rotation(g, 0) == -rot, "orientation reversal on " << to_string(f.word()));
  }
  return std::to_string(corpus.size()) + " fronts";
}

// --- 7 ----------------------------------------------------------------------

std::string homology_oracle() {
  const AbelianGroup lens = first_homology(ContactDiagram{{unknot("K", frac(-5, 3))}});
  CHECK(lens.order() && *lens.order() == 8, "(-5/3) on tb -1 unknot gave " << lens.str());

  const OrientedFront once = stabilize(standard_unknot(), 0, StabilizationSign::Negative);
  const DiagramComponent stabilized{"K", once.word(), Rational(-1), {}};
  const AbelianGroup z3 = first_homology(ContactDiagram{{stabilized}});
  CHECK(z3.str() == "Z/3", "(-1) on stabilized unknot gave " << z3.str());

  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
  const int trials = 500;
  for (int t = 0; t < trials; ++t) {
    const auto rows = static_cast<std::size_t>(dim(rng)), cols = static_cast<std::size_t>(dim(rng));
    std::vector<std::vector<i64>> data(rows, std::vector<i64>(cols));
    IntMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        data[i][j] = entry(rng);
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = data[i][j];
      }
    }
    const auto snf = smith_normal_form(m);
    CHECK(snf.u * m * snf.v == snf.d, "U M V != D at trial " << t);
    const auto [factors, free_rank] = oracle::cokernel(data, cols);
    const AbelianGroup g = cokernel(m);
    CHECK(g.free_rank == free_rank && g.torsion == std::vector<Integer>(factors.begin(), factors.end()),
          "trial " << t << ": cokernel " << g.str() << " disagrees with determinantal divisors");
  }
  return "Z/8, Z/3, " + std::to_string(trials) + " random matrices";
}

// --- 8 ----------------------------------------------------------------------

std::string tamper_detection() {
  ContactDiagram d;
  for (const char* r : {"-5/3", "-7/5", "3", "1/2", "4/9", "-1/4", "-17/5"}) {
    d.components.push_back(unknot(std::string("K") + std::to_string(d.components.size()), Rational::parse(r)));
  }
  const std::string text = dump_result(convert(d));

  const auto dir = std::filesystem::temp_directory_path() / "contactsurg-acceptance";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "mutated.pm1.json").string();

  {
    std::ofstream(path) << text;
    std::ostringstream out, err;
    CHECK(cli::cmd_verify(path, false, out, err) == cli::kOk, "untampered result failed: " << out.str() << err.str());
  }

  std::mt19937_64 rng(8);
  const int mutations = 100;
  for (int t = 0; t < mutations; ++t) {
    auto doc = tamper::Json::parse(text);
    const std::string label = tamper::mutate_document(doc, rng);
    std::ofstream(path) << doc.dump(2);
    std::ostringstream out, err;
    const int code = cli::cmd_verify(path, false, out, err);
    CHECK(code == cli::kCertificate, "mutation " << t << " (" << label << ") exit code " << code << " " << err.str());
    CHECK(out.str().find("FAIL") != std::string::npos, "mutation " << t << " (" << label << ") reported no failing clause");
  }
  std::filesystem::remove_all(dir);
  return std::to_string(mutations) + " mutations";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"1 cf soundness", cf_soundness},
      {"2 slope duality", slope_duality},
      {"3 count equals enumeration", count_equals_enumeration},
      {"4 dispatch conformance", dispatch_conformance},
      {"5 lutz counts", lutz_counts},
      {"6 front invariants", front_invariants},
      {"7 homology oracle", homology_oracle},
      {"8 certificate tamper detection", tamper_detection},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = check();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && seconds >= 60.0) {
      ok = false;
      detail += " (over the 60 s budget)";
    }
    failed += !ok;
    std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << " [" << std::fixed << std::setprecision(2)
              << seconds << " s]" << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
