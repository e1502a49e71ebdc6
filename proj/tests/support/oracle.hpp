#pragma once

// Independent reference computations for tests. Nothing here goes through
// rectree::solve_quadratic or the Rational class.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

/// Somos-4 by plain integer arithmetic; asserts exact divisibility.
inline std::vector<std::int64_t> somos4_int64(std::int64_t c1, std::int64_t c2, int n) {
  std::vector<std::int64_t> s(4, 1);
  for (int i = 4; i < n; ++i) {
    const std::int64_t num = c1 * s[i - 1] * s[i - 3] + c2 * s[i - 2] * s[i - 2];
    if (num % s[i - 4] != 0) std::abort();
    s.push_back(num / s[i - 4]);
  }
  return s;
}

/// Somos-4 over mpz with exact division; returns false if a division leaves
/// a remainder or hits zero.
inline bool somos4_mpz(long c1, long c2, int n, std::vector<mpz_class>& out) {
  out.assign(4, mpz_class(1));
  for (int i = 4; i < n; ++i) {
    if (out[i - 4] == 0) return false;
    mpz_class num = c1 * out[i - 1] * out[i - 3] + c2 * out[i - 2] * out[i - 2];
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), out[i - 4].get_mpz_t());
    if (r != 0) return false;
    out.push_back(q);
  }
  return true;
}

/// Integer fraction (num, den) with den > 0, reduced.
struct Frac {
  std::int64_t num;
  std::int64_t den;
  friend bool operator<(const Frac& a, const Frac& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator==(const Frac& a, const Frac& b) { return a.num == b.num && a.den == b.den; }
};

inline Frac make_frac(std::int64_t n, std::int64_t d) {
  if (d < 0) n = -n, d = -d;
  const std::int64_t g = std::gcd(n, d);
  return g ? Frac{n / g, d / g} : Frac{0, 1};
}

/// Rational roots of a*x^2 + b*x + c (integers, a != 0) by the rational
/// root theorem: every root p/q has p | c and q | a.
inline std::set<Frac> rational_roots_by_enumeration(std::int64_t a, std::int64_t b, std::int64_t c) {
  std::set<Frac> roots;
  auto divisors = [](std::int64_t v) {
    std::vector<std::int64_t> out;
    v = std::llabs(v);
    for (std::int64_t d = 1; d <= v; ++d) {
      if (v % d == 0) out.push_back(d);
    }
    return out;
  };
  auto eval_zero = [&](std::int64_t p, std::int64_t q) {
    const __int128 v = static_cast<__int128>(a) * p * p + static_cast<__int128>(b) * p * q +
                       static_cast<__int128>(c) * q * q;
    return v == 0;
  };
  if (c == 0) {
    roots.insert({0, 1});
    if (b != 0) {
      // a x + b = 0
      roots.insert(make_frac(-b, a));
    }
    return roots;
  }
  for (std::int64_t p : divisors(c)) {
    for (std::int64_t q : divisors(a)) {
      for (std::int64_t sp : {p, -p}) {
        if (eval_zero(sp, q)) roots.insert(make_frac(sp, q));
      }
    }
  }
  return roots;
}

inline std::int64_t floor_div4_square(std::int64_t m) {
  // Brute-force floor(m^2 / 4): count k with 4k <= m^2.
  std::int64_t k = 0;
  while (4 * (k + 1) <= m * m) ++k;
  return k;
}

}  // namespace oracle
