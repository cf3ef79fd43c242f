#pragma once

// Test-only reference computations. None of these call into the library;
// they use plain int64 arithmetic and brute force so they stay independent
// of the code paths they check.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

struct Frac {
  i64 num;
  i64 den;  // > 0, reduced

  friend bool operator==(const Frac&, const Frac&) = default;
};

inline Frac frac(i64 n, i64 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const i64 g = std::gcd(n < 0 ? -n : n, d);
  return {n / g, d / g};
}

/// a1 - 1/(a2 - 1/(... - 1/an)) evaluated right to left; nullopt on a zero tail.
inline std::optional<Frac> eval_cf(const std::vector<i64>& a) {
  Frac v{a.back(), 1};
  for (auto i = static_cast<std::ptrdiff_t>(a.size()) - 2; i >= 0; --i) {
    if (v.num == 0) return std::nullopt;
    // a_i - 1/v = (a_i * v.num - v.den) / v.num
    v = frac(a[static_cast<std::size_t>(i)] * v.num - v.den, v.num);
  }
  return v;
}

/// Every list [a1..an] with a1 in [lo, -1], ai in [lo, -2], n <= max_len,
/// whose value equals target.
inline std::vector<std::vector<i64>> all_expansions(Frac target, i64 lo, std::size_t max_len) {
  std::vector<std::vector<i64>> hits;
  std::vector<i64> cur;
  auto rec = [&](auto&& self) -> void {
    if (!cur.empty()) {
      if (auto v = eval_cf(cur); v && *v == target) hits.push_back(cur);
    }
    if (cur.size() == max_len) return;
    const i64 hi = cur.empty() ? -1 : -2;
    for (i64 a = lo; a <= hi; ++a) {
      cur.push_back(a);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return hits;
}

using M2 = std::array<i64, 4>;  // row-major a b c d

inline M2 mul(const M2& x, const M2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

/// (1 1; 0 1) * prod (-ri 1; -1 0) by naive multiplication.
inline M2 chain_product(const std::vector<i64>& rs, bool with_shift = true) {
  M2 m = with_shift ? M2{1, 1, 0, 1} : M2{1, 0, 0, 1};
  for (i64 r : rs) m = mul(m, M2{-r, 1, -1, 0});
  return m;
}

/// Brute-force integer solution of prod (-ri 1; -1 0) (x, y) = (-1, 1)
/// with |x|, |y| <= bound.
inline std::optional<std::pair<i64, i64>> solve_slope(const std::vector<i64>& rs, i64 bound) {
  const M2 g = chain_product(rs, false);
  for (i64 x = -bound; x <= bound; ++x) {
    for (i64 y = -bound; y <= bound; ++y) {
      if (g[0] * x + g[1] * y == -1 && g[2] * x + g[3] * y == 1) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

/// Counts rotation tuples realizable by unknots with tb_i = r_i + 1, by
/// scanning every rot in [-|tb|, |tb|] against Bennequin and parity.
inline i64 count_rotation_tuples(const std::vector<i64>& rs) {
  i64 total = 1;
  for (i64 r : rs) {
    const i64 tb = r + 1;
    i64 ok = 0;
    for (i64 rot = tb; rot <= -tb; ++rot) {
      if (tb + std::llabs(rot) <= -1 && ((rot - tb - 1) % 2 + 2) % 2 == 0) ++ok;
    }
    total *= ok;
  }
  return total;
}

/// Determinant by cofactor expansion (small matrices only).
inline i64 det(const std::vector<std::vector<i64>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  i64 total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<i64>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<i64> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    const i64 term = m[0][c] * det(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

/// Invariant factors of the cokernel via determinantal divisors:
/// d_k = gcd of all k x k minors, s_k = d_k / d_(k-1). Returns the nonzero
/// factors greater than 1 and the free rank (rows - rank).
inline std::pair<std::vector<i64>, std::size_t> cokernel(const std::vector<std::vector<i64>>& m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<i64> factors;
  i64 prev = 1;
  std::size_t rank = 0;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rsets, csets;
    subsets(rows, k, rsets);
    subsets(cols, k, csets);
    i64 g = 0;
    for (const auto& rs : rsets) {
      for (const auto& cs : csets) {
        std::vector<std::vector<i64>> minor;
        for (auto r : rs) {
          std::vector<i64> row;
          for (auto c : cs) row.push_back(m[r][c]);
          minor.push_back(row);
        }
        g = std::gcd(g, std::llabs(det(minor)));
      }
    }
    if (g == 0) break;
    rank = k;
    const i64 s = g / prev;
    if (s > 1) factors.push_back(s);
    prev = g;
  }
  return {factors, rows - rank};
}

}  // namespace oracle
