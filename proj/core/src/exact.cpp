#include "rectree/exact.hpp"

#include <cctype>

#include "rectree/errors.hpp"

namespace rectree {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw InvalidArgument("not a rational: '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num_text));
  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text) || den_text.front() == '-' || den_text.front() == '+') {
    throw InvalidArgument("not a rational: '" + std::string(text) + "'");
  }
  return Rational(parse_integer(num_text), parse_integer(den_text));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::pow(unsigned long exponent) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), exponent);
  // Powers of coprime integers stay coprime.
  mpq_class out;
  out.get_num() = num;
  out.get_den() = den;
  return Rational(std::move(out));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  mpq_class out;
  mpq_inv(out.get_mpq_t(), q_.get_mpq_t());
  return Rational(std::move(out));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
  q_ *= rhs.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  q_ /= rhs.q_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational rat_add(const Rational& a, const Rational& b) { return a + b; }
Rational rat_sub(const Rational& a, const Rational& b) { return a - b; }
Rational rat_mul(const Rational& a, const Rational& b) { return a * b; }
Rational rat_div(const Rational& a, const Rational& b) { return a / b; }

std::optional<Integer> exact_isqrt(const Integer& n) {
  if (sgn(n) < 0) return std::nullopt;
  Integer root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (rem != 0 || root * root != n) return std::nullopt;
  return root;
}

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  auto num = exact_isqrt(x.numerator());
  if (!num) return std::nullopt;
  auto den = exact_isqrt(x.denominator());
  if (!den) return std::nullopt;
  return Rational(*num, *den);
}

std::string_view to_string(RootKind kind) {
  switch (kind) {
    case RootKind::TwoRational: return "two_rational";
    case RootKind::OneRationalDouble: return "one_rational_double";
    case RootKind::Irrational: return "irrational";
    case RootKind::Complex: return "complex";
    case RootKind::DegenerateLinear: return "degenerate_linear";
    case RootKind::Degenerate: return "degenerate";
  }
  return "unknown";
}

QuadraticRoots solve_quadratic(const Rational& p2, const Rational& p1, const Rational& p0) {
  QuadraticRoots out;
  if (p2.is_zero()) {
    if (p1.is_zero()) {
      out.kind = RootKind::Degenerate;
      out.identically_zero = p0.is_zero();
      return out;
    }
    out.kind = RootKind::DegenerateLinear;
    out.roots.push_back(-p0 / p1);
    out.multiplicities.push_back(1);
    return out;
  }

  const Rational disc = p1 * p1 - Rational(4) * p2 * p0;
  if (disc.sign() < 0) {
    out.kind = RootKind::Complex;
    return out;
  }
  const auto root = exact_sqrt(disc);
  if (!root) {
    out.kind = RootKind::Irrational;
    return out;
  }
  const Rational two_a = Rational(2) * p2;
  if (root->is_zero()) {
    out.kind = RootKind::OneRationalDouble;
    out.roots.push_back(-p1 / two_a);
    out.multiplicities.push_back(2);
    return out;
  }
  Rational lo = (-p1 - *root) / two_a;
  Rational hi = (-p1 + *root) / two_a;
  if (hi < lo) std::swap(lo, hi);
  out.kind = RootKind::TwoRational;
  out.roots = {std::move(lo), std::move(hi)};
  out.multiplicities = {1, 1};
  return out;
}

Rational eval_quadratic(const Rational& p2, const Rational& p1, const Rational& p0,
                        const Rational& x) {
  return (p2 * x + p1) * x + p0;
}

std::size_t RationalHash::operator()(const Rational& r) const {
  const auto& q = r.raw();
  std::size_t h = mpz_fdiv_ui(q.get_num_mpz_t(), 1000000007UL);
  h = h * 1315423911u ^ mpz_fdiv_ui(q.get_den_mpz_t(), 998244353UL);
  return h ^ static_cast<std::size_t>(sgn(q.get_num()) + 1);
}

}  // namespace rectree
