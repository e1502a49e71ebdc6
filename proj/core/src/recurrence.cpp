#include "rectree/recurrence.hpp"

#include "rectree/errors.hpp"

namespace rectree {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::string_view family_name(const Family& f) {
  return std::visit(
      overloaded{
          [](const family::FirstOrderQuadratic&) { return std::string_view("first-order"); },
          [](const family::SomosRatioQuadratic&) { return std::string_view("somos-ratio"); },
          [](const family::Order3SomosUnfolding&) { return std::string_view("somos-order3"); },
          [](const family::ExplicitM1&) { return std::string_view("explicit-m1"); },
          [](const family::Custom&) { return std::string_view("custom"); },
      },
      f);
}

Recurrence::Recurrence(std::size_t order_k, std::size_t degree_m, Family family,
                       CoefficientFn coeffs)
    : order_(order_k), degree_(degree_m), family_(std::move(family)), coeffs_(std::move(coeffs)) {
  if (order_ == 0) throw InvalidArgument("recurrence order must be positive");
  if (degree_ == 0) throw InvalidArgument("recurrence degree must be positive");
  if (!coeffs_) throw InvalidArgument("recurrence needs a coefficient evaluator");
}

std::vector<Rational> Recurrence::coefficients(std::span<const Rational> window) const {
  if (window.size() != order_) throw BadWindow(order_, window.size());
  auto out = coeffs_(window);
  if (out.size() != degree_ + 1) {
    throw InvalidArgument("coefficient evaluator returned " + std::to_string(out.size()) +
                          " values for a degree-" + std::to_string(degree_) + " recurrence");
  }
  return out;
}

Recurrence make_first_order(long A1, long A2, long B1, long B2) {
  return Recurrence(1, 2, family::FirstOrderQuadratic{A1, A2, B1, B2},
                    [A1, A2, B1, B2](std::span<const Rational> w) {
                      const Rational& y = w[0];
                      return std::vector<Rational>{y * y, Rational(A1) + Rational(A2) * y,
                                                   Rational(B1) + Rational(B2) * y};
                    });
}

Recurrence make_somos_ratio_quadratic(ParamPoint c) {
  return Recurrence(1, 2, family::SomosRatioQuadratic{c}, [c](std::span<const Rational> w) {
    const Rational& y = w[0];
    const Rational k = Rational(2 * c.c1 + c.c2 + 1);
    return std::vector<Rational>{y * y, Rational(c.c1) - k * y, Rational(c.c1) * y + Rational(c.c2)};
  });
}

Recurrence make_order3_unfolding(ParamPoint c) {
  return Recurrence(3, 2, family::Order3SomosUnfolding{c}, [c](std::span<const Rational> w) {
    // w = (s(n), s(n+1), s(n+2)); the unknown is s(n+3).
    const Rational& s0 = w[0];
    const Rational& s1 = w[1];
    const Rational& s2 = w[2];
    const Rational c1(c.c1);
    const Rational c2(c.c2);
    const Rational k(2 * c.c1 + c.c2 + 1);
    Rational p2 = s0 * s0;
    Rational p1 = c1 * s1 * s1 * s1 - k * s2 * s1 * s0;
    Rational p0 = c1 * s2 * s2 * s2 * s0 + c2 * s2 * s2 * s1 * s1;
    return std::vector<Rational>{std::move(p2), std::move(p1), std::move(p0)};
  });
}

Recurrence make_explicit_m1(family::ExplicitKind kind, ParamPoint c) {
  switch (kind) {
    case family::ExplicitKind::Somos4:
      return Recurrence(4, 1, family::ExplicitM1{kind, c}, [c](std::span<const Rational> w) {
        // w = (s(n-4), s(n-3), s(n-2), s(n-1))
        return std::vector<Rational>{
            w[0], -(Rational(c.c1) * w[3] * w[1] + Rational(c.c2) * w[2] * w[2])};
      });
    case family::ExplicitKind::RatioOfRatios:
      return Recurrence(2, 1, family::ExplicitM1{kind, c}, [c](std::span<const Rational> w) {
        // w = (a(n), a(n+1))
        return std::vector<Rational>{w[1] * w[1] * w[0], -(Rational(c.c1) * w[1] + Rational(c.c2))};
      });
  }
  throw InvalidArgument("unknown explicit recurrence kind");
}

Recurrence make_custom(std::string name, std::size_t order_k, std::size_t degree_m,
                       Recurrence::CoefficientFn coeffs) {
  return Recurrence(order_k, degree_m, family::Custom{std::move(name)}, std::move(coeffs));
}

StepPolynomial step_polynomial(const Recurrence& r, std::span<const Rational> window) {
  if (window.size() != r.order()) throw BadWindow(r.order(), window.size());
  if (r.degree() != 2) {
    throw Unsupported("step polynomial requested for a degree-" + std::to_string(r.degree()) +
                      " recurrence; only degree 2 is solvable");
  }
  auto c = r.coefficients(window);
  return StepPolynomial{std::move(c[0]), std::move(c[1]), std::move(c[2])};
}

}  // namespace rectree
