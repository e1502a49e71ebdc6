#include "rectree/somos.hpp"

#include <algorithm>
#include <sstream>

#include "rectree/errors.hpp"

namespace rectree {

SomosRun somos4(ParamPoint c, int n) {
  if (n < 4) throw InvalidArgument("somos4 needs at least 4 terms, got " + std::to_string(n));
  SomosRun run;
  run.c = c;
  auto& s = run.s;
  s.assign(4, Rational(1));
  s.reserve(static_cast<std::size_t>(n));
  const Rational c1(c.c1);
  const Rational c2(c.c2);
  for (int idx = 5; idx <= n; ++idx) {
    // s[idx - 1] is s(idx)
    const Rational& back4 = s[idx - 5];
    if (back4.is_zero()) throw ZeroDivision("somos4", idx);
    s.push_back((c1 * s[idx - 2] * s[idx - 4] + c2 * s[idx - 3] * s[idx - 3]) / back4);
  }
  for (int i = 1; i < n; ++i) {
    if (s[i - 1].is_zero()) throw ZeroDivision("somos4 ratios", i);
    run.t.push_back(s[i] / s[i - 1]);
  }
  for (int i = 1; i + 1 < n; ++i) {
    if (run.t[i - 1].is_zero()) throw ZeroDivision("somos4 ratios of ratios", i);
    run.a.push_back(run.t[i] / run.t[i - 1]);
  }
  return run;
}

std::vector<Rational> ac_direct(ParamPoint c, int n) {
  if (n < 1) throw InvalidArgument("ac_direct needs at least 1 term");
  std::vector<Rational> a{Rational(1), Rational(1)};
  a.resize(std::min<std::size_t>(a.size(), static_cast<std::size_t>(n)));
  const Rational c1(c.c1);
  const Rational c2(c.c2);
  for (int idx = 3; idx <= n; ++idx) {
    const Rational& prev = a[idx - 2];
    const Rational denom = prev * prev * a[idx - 3];
    if (denom.is_zero()) throw ZeroDivision("ac_direct", idx);
    a.push_back((c1 * prev + c2) / denom);
  }
  return a;
}

Rational t_identity(ParamPoint c, const Rational& a_n, const Rational& a_next) {
  const Rational c1(c.c1);
  const Rational k(2 * c.c1 + c.c2 + 1);
  const Rational prod = a_next * a_n;
  return prod * prod - k * prod + c1 * a_next + c1 * a_n + Rational(c.c2);
}

bool check_claim1(ParamPoint c, int n) {
  if (n < 3) throw InvalidArgument("check_claim1 needs N >= 3");
  const auto run = somos4(c, std::max(4, n + 2));
  const auto direct = ac_direct(c, n);
  return std::equal(direct.begin(), direct.end(), run.a.begin());
}

bool check_claim2(ParamPoint c, int n) {
  if (n < 3) throw InvalidArgument("check_claim2 needs N >= 3");
  const auto a = ac_direct(c, n);
  const Rational k(2 * c.c1 + c.c2 + 1);
  const Rational c1(c.c1);
  for (int i = 0; i + 2 < n; ++i) {
    const Rational sq = a[i + 1] * a[i + 1];
    if (a[i + 2] * sq + sq * a[i] != k * a[i + 1] - c1) return false;
  }
  return true;
}

bool check_T_identity(ParamPoint c, int n) {
  if (n < 2) throw InvalidArgument("check_T_identity needs N >= 2");
  const auto a = ac_direct(c, n);
  for (int i = 0; i + 1 < n; ++i) {
    if (!t_identity(c, a[i], a[i + 1]).is_zero()) return false;
  }
  return true;
}

bool is_integer_sequence(const std::vector<Rational>& values) {
  return std::all_of(values.begin(), values.end(), [](const Rational& v) { return v.is_integer(); });
}

std::string to_bfile(const SomosRun& run) {
  std::ostringstream os;
  for (std::size_t i = 0; i < run.s.size(); ++i) {
    if (!run.s[i].is_integer()) {
      throw InvalidArgument("b-file output needs integer terms; s(" + std::to_string(i + 1) +
                            ") = " + run.s[i].str());
    }
    os << (i + 1) << ' ' << run.s[i].str() << '\n';
  }
  return os.str();
}

}  // namespace rectree
