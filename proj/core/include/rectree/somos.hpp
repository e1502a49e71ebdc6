#pragma once

#include <string>
#include <vector>

#include "rectree/exact.hpp"
#include "rectree/recurrence.hpp"

namespace rectree {

/// A generalized Somos-4 run with its derived sequences. All vectors are
/// stored 0-based: s[0] is s(1).
struct SomosRun {
  ParamPoint c;
  std::vector<Rational> s;  // s(1..N)
  std::vector<Rational> t;  // t(n) = s(n+1)/s(n), n = 1..N-1
  std::vector<Rational> a;  // a(n) = t(n+1)/t(n), n = 1..N-2
};

/// s(n) s(n-4) = c1 s(n-1) s(n-3) + c2 s(n-2)^2 with s(1..4) = 1.
/// Throws InvalidArgument for n < 4 and ZeroDivision naming the failing index.
SomosRun somos4(ParamPoint c, int n);

/// a(1..n) from a(n+2) = (c1 a(n+1) + c2) / (a(n+1)^2 a(n)), a(1) = a(2) = 1.
std::vector<Rational> ac_direct(ParamPoint c, int n);

/// T(n) evaluated on a consecutive pair (a(n), a(n+1)).
Rational t_identity(ParamPoint c, const Rational& a_n, const Rational& a_next);

/// Ratios of ratios of the Somos run agree with ac_direct for all n <= N.
bool check_claim1(ParamPoint c, int n);
/// a(n+2) a(n+1)^2 + a(n+1)^2 a(n) = (2c1+c2+1) a(n+1) - c1 for n+2 <= N.
bool check_claim2(ParamPoint c, int n);
/// T(n) = 0 for n <= N-1.
bool check_T_identity(ParamPoint c, int n);

bool is_integer_sequence(const std::vector<Rational>& values);

/// OEIS b-file lines "n value" for s. Throws InvalidArgument if any term is
/// not an integer.
std::string to_bfile(const SomosRun& run);

}  // namespace rectree
