#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rectree/exact.hpp"

namespace rectree {

/// Parameters (c1, c2) of the generalized Somos-4 family.
struct ParamPoint {
  long c1 = 1;
  long c2 = 1;

  long sum() const { return c1 + c2; }
  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

namespace family {

/// a(n)^2 a(n+1)^2 + (A1 + A2 a(n)) a(n+1) + (B1 + B2 a(n)) = 0
struct FirstOrderQuadratic {
  long A1 = 0, A2 = 0, B1 = 0, B2 = 0;
  friend bool operator==(const FirstOrderQuadratic&, const FirstOrderQuadratic&) = default;
};

/// The quadratic satisfied by consecutive ratios-of-ratios of a Somos-4 run.
struct SomosRatioQuadratic {
  ParamPoint c;
};

/// Order-3 quadratic recurrence obtained by unfolding SomosRatioQuadratic
/// back onto the Somos-4 terms.
struct Order3SomosUnfolding {
  ParamPoint c;
};

enum class ExplicitKind {
  Somos4,          // s(n) s(n-4) = c1 s(n-1) s(n-3) + c2 s(n-2)^2
  RatioOfRatios,   // a(n+2) a(n+1)^2 a(n) = c1 a(n+1) + c2
};

/// Degree-1 recurrences, i.e. ordinary sequences.
struct ExplicitM1 {
  ExplicitKind kind = ExplicitKind::Somos4;
  ParamPoint c;
};

/// Caller-supplied coefficient evaluator of any order and degree.
struct Custom {
  std::string name;
};

}  // namespace family

using Family = std::variant<family::FirstOrderQuadratic, family::SomosRatioQuadratic,
                            family::Order3SomosUnfolding, family::ExplicitM1, family::Custom>;

/// Short stable identifier: "first-order", "somos-ratio", "somos-order3",
/// "explicit-m1" or "custom".
std::string_view family_name(const Family& f);

/// sum_i P_i(window) * x^i = 0, where x is the term following the window.
/// Coefficients are produced highest degree first: (P_m, ..., P_0).
class Recurrence {
public:
  using CoefficientFn = std::function<std::vector<Rational>(std::span<const Rational>)>;

  Recurrence(std::size_t order_k, std::size_t degree_m, Family family, CoefficientFn coeffs);

  std::size_t order() const { return order_; }
  std::size_t degree() const { return degree_; }
  const Family& family() const { return family_; }

  /// Throws BadWindow if window.size() != order().
  std::vector<Rational> coefficients(std::span<const Rational> window) const;

private:
  std::size_t order_;
  std::size_t degree_;
  Family family_;
  CoefficientFn coeffs_;
};

Recurrence make_first_order(long A1, long A2, long B1, long B2);
Recurrence make_somos_ratio_quadratic(ParamPoint c);
Recurrence make_order3_unfolding(ParamPoint c);
Recurrence make_explicit_m1(family::ExplicitKind kind, ParamPoint c);
Recurrence make_custom(std::string name, std::size_t order_k, std::size_t degree_m,
                       Recurrence::CoefficientFn coeffs);

struct StepPolynomial {
  Rational p2, p1, p0;
  friend bool operator==(const StepPolynomial&, const StepPolynomial&) = default;
};

/// The quadratic in the next term at a concrete window.
/// Throws BadWindow on a length mismatch and Unsupported unless degree() == 2.
StepPolynomial step_polynomial(const Recurrence& r, std::span<const Rational> window);

}  // namespace rectree
