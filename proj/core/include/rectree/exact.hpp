#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace rectree {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : q_(value) {}  // NOLINT
  /// Throws DivisionByZero when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  /// Parses "p" or "p/q" (optional sign on p). Throws InvalidArgument.
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational abs() const;
  Rational pow(unsigned long exponent) const;
  /// Multiplicative inverse. Throws DivisionByZero on zero.
  Rational inverse() const;

  /// "p/q", or "p" when q = 1.
  std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  const mpq_class& raw() const { return q_; }

private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

Rational rat_add(const Rational& a, const Rational& b);
Rational rat_sub(const Rational& a, const Rational& b);
Rational rat_mul(const Rational& a, const Rational& b);
/// Throws DivisionByZero when b is zero.
Rational rat_div(const Rational& a, const Rational& b);

/// Exact square root of a nonnegative integer, if it is a perfect square.
std::optional<Integer> exact_isqrt(const Integer& n);

/// Nonnegative rational square root of x when x is the square of a rational;
/// empty for negative x and for non-squares.
std::optional<Rational> exact_sqrt(const Rational& x);

enum class RootKind {
  TwoRational,
  OneRationalDouble,
  Irrational,
  Complex,
  DegenerateLinear,
  Degenerate,
};

std::string_view to_string(RootKind kind);

/// Exact classification of the roots of p2*X^2 + p1*X + p0.
struct QuadraticRoots {
  RootKind kind = RootKind::Degenerate;
  /// Ascending order.
  std::vector<Rational> roots;
  std::vector<int> multiplicities;
  /// Only meaningful for Degenerate: true when p0 = 0 too (every X solves it),
  /// false when no X does.
  bool identically_zero = false;

  bool is_rational() const {
    return kind == RootKind::TwoRational || kind == RootKind::OneRationalDouble;
  }
};

QuadraticRoots solve_quadratic(const Rational& p2, const Rational& p1, const Rational& p0);

/// p2*x^2 + p1*x + p0, evaluated exactly.
Rational eval_quadratic(const Rational& p2, const Rational& p1, const Rational& p0,
                        const Rational& x);

/// Hash of a rational (for unordered containers).
struct RationalHash {
  std::size_t operator()(const Rational& r) const;
};

}  // namespace rectree
