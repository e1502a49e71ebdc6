#include "rectree/analysis.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "rectree/errors.hpp"
#include "rectree/somos.hpp"

namespace rectree {

long f_exponent(int n) {
  if (n < 4) throw InvalidArgument("f_exponent is defined for n >= 4");
  const long m = n - 3;
  return (m * m) / 4;
}

ClosedFormReport verify_closed_form_branch(ParamPoint c, int depth) {
  if (c.sum() == 0) throw InvalidArgument("closed-form branch needs c1 + c2 != 0");
  if (depth < 6) throw InvalidArgument("closed-form verification needs depth >= 6");

  ClosedFormReport report;
  report.c = c;
  const Rational base(c.sum());
  for (int n = 1; n <= depth; ++n) {
    report.expected.push_back(n <= 3 ? Rational(1) : base.pow(static_cast<unsigned long>(f_exponent(n))));
  }

  const Recurrence r = make_order3_unfolding(c);
  auto& path = report.found_path;
  path.assign(3, Rational(1));
  report.alternatives.assign(3, std::nullopt);
  report.depth_checked = 3;

  for (int n = 4; n <= depth; ++n) {
    const auto p = step_polynomial(r, std::span<const Rational>(path).last(3));
    const auto roots = solve_quadratic(p.p2, p.p1, p.p0);
    const Rational& want = report.expected[n - 1];
    if (!roots.is_rational()) {
      report.mismatch_depth = n;
      report.message = "s(" + std::to_string(n) + ") step is " + std::string(to_string(roots.kind));
      return report;
    }
    const auto it = std::find(roots.roots.begin(), roots.roots.end(), want);
    if (it == roots.roots.end()) {
      report.mismatch_depth = n;
      report.message = "s(" + std::to_string(n) + "): expected " + want.str() + " not among roots";
      return report;
    }
    std::optional<Rational> other;
    for (const auto& root : roots.roots) {
      if (root != want) other = root;
    }
    path.push_back(want);
    report.alternatives.push_back(std::move(other));
    report.depth_checked = n;
  }
  report.matched = true;
  return report;
}

FactorBase make_factor_base(const std::vector<Rational>& somos_terms) {
  std::vector<std::pair<Integer, int>> entries;
  std::set<Integer> seen;
  for (std::size_t i = 0; i < somos_terms.size(); ++i) {
    const Rational& s = somos_terms[i];
    if (!s.is_integer()) continue;
    Integer v = ::abs(s.numerator());
    if (v <= 1 || !seen.insert(v).second) continue;
    entries.emplace_back(std::move(v), static_cast<int>(i) + 1);
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  FactorBase base;
  for (auto& [v, idx] : entries) {
    base.values.push_back(std::move(v));
    base.indices.push_back(idx);
  }
  return base;
}

namespace {

class Factorizer {
public:
  explicit Factorizer(const FactorBase& base) : base_(base) {}

  bool solve(const Integer& v, std::size_t start, std::vector<int>& out) {
    if (v == 1) return true;
    const auto key = std::make_pair(v, start);
    if (dead_.contains(key)) return false;
    for (std::size_t i = start; i < base_.values.size(); ++i) {
      const Integer& t = base_.values[i];
      if (t > v || !mpz_divisible_p(v.get_mpz_t(), t.get_mpz_t())) continue;
      out.push_back(base_.indices[i]);
      if (solve(Integer(v / t), i, out)) return true;
      out.pop_back();
    }
    dead_.insert(key);
    return false;
  }

private:
  const FactorBase& base_;
  std::set<std::pair<Integer, std::size_t>> dead_;
};

}  // namespace

std::optional<std::vector<int>> factor_over_somos(const Integer& value, const FactorBase& base) {
  if (value == 0) return std::nullopt;
  Factorizer f(base);
  std::vector<int> out;
  if (!f.solve(Integer(::abs(value)), 0, out)) return std::nullopt;
  return out;
}

Rational witness_value(const FactorWitness& w, const std::vector<Rational>& somos_terms) {
  Rational num(1), den(1);
  for (int idx : w.numerator) num *= somos_terms.at(idx - 1).abs();
  for (int idx : w.denominator) den *= somos_terms.at(idx - 1).abs();
  return num / den;
}

ConjectureReport check_conjecture(ParamPoint c, int depth, int somos_horizon,
                                  const TreeOptions& options) {
  ConjectureReport report;
  report.c = c;
  report.depth = depth;
  report.somos_horizon = somos_horizon;
  report.convention =
      "factors are |s_c(n)| > 1 for n <= horizon, repetition allowed; sign handled separately; "
      "1 is the empty product; a miss means not factorable within the horizon";

  const auto run = somos4(c, std::max(4, somos_horizon));
  const FactorBase base = make_factor_base(run.s);

  TreeOptions opts = options;
  opts.memoize = true;
  const Rational one(1);
  const auto tree = build_tree(make_order3_unfolding(c), std::vector<Rational>{one, one, one},
                               depth, opts);

  std::set<Rational> values;
  for_each_node(tree, [&](const TreeNode& node, const TreeNode*, std::span<const Rational>) {
    values.insert(node.value);
  });
  report.values_checked = values.size();

  Factorizer factorizer(base);
  for (const auto& v : values) {
    FactorWitness w;
    bool ok = !v.is_zero();
    if (ok) ok = factorizer.solve(Integer(::abs(v.numerator())), 0, w.numerator);
    if (ok) ok = factorizer.solve(v.denominator(), 0, w.denominator);
    if (ok) {
      report.witnesses.emplace(v, std::move(w));
    } else {
      report.failures.push_back(v);
    }
  }
  report.all_factorable = report.failures.empty();
  return report;
}

}  // namespace rectree
