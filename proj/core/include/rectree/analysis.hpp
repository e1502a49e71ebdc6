#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rectree/exact.hpp"
#include "rectree/recurrence.hpp"
#include "rectree/tree.hpp"

namespace rectree {

/// floor((n-3)^2 / 4). Throws InvalidArgument for n < 4.
long f_exponent(int n);

/// Result of following the (c1+c2)^f(n) branch through the order-3 tree.
struct ClosedFormReport {
  ParamPoint c;
  int depth_checked = 0;
  bool matched = false;
  /// expected[i] is the value predicted for s(i+1).
  std::vector<Rational> expected;
  std::vector<Rational> found_path;
  /// The root that was not taken when solving for s(i+1); empty for the
  /// initial window and for double roots.
  std::vector<std::optional<Rational>> alternatives;
  std::optional<int> mismatch_depth;
  std::string message;
};

/// Walks the order-3 tree from (1,1,1), takes s(4) = 1 and then at every
/// step the root equal to (c1+c2)^f(n).
/// Throws InvalidArgument when c1 + c2 = 0 or depth < 6.
ClosedFormReport verify_closed_form_branch(ParamPoint c, int depth);

/// Indices n (1-based) of the Somos terms whose absolute values multiply to a
/// given integer; repeated indices are repeated factors.
struct FactorWitness {
  std::vector<int> numerator;
  std::vector<int> denominator;
};

struct ConjectureReport {
  ParamPoint c;
  int depth = 0;
  int somos_horizon = 0;
  std::size_t values_checked = 0;
  bool all_factorable = true;
  std::map<Rational, FactorWitness> witnesses;
  /// Values with a numerator or denominator not factorable within the horizon.
  std::vector<Rational> failures;
  std::string convention;
};

/// Somos terms usable as factors: |s(n)| > 1 for n <= horizon, one index per
/// distinct absolute value (the smallest), sorted by descending value.
struct FactorBase {
  std::vector<int> indices;
  std::vector<Integer> values;
};

FactorBase make_factor_base(const std::vector<Rational>& somos_terms);

/// Expresses |value| as a product of factor-base entries by trial division,
/// largest term first, with backtracking. 1 is the empty product; 0 fails.
std::optional<std::vector<int>> factor_over_somos(const Integer& value, const FactorBase& base);

/// Multiplies |s(n)| over the witness indices back together, numerator over
/// denominator. `somos_terms[0]` is s(1).
Rational witness_value(const FactorWitness& w, const std::vector<Rational>& somos_terms);

/// Builds the order-3 tree for c from (1,1,1) to `depth` and tries to write the
/// numerator and denominator of every distinct value as Somos products.
/// Inconclusive values are listed as failures; this never refutes anything.
ConjectureReport check_conjecture(ParamPoint c, int depth, int somos_horizon,
                                  const TreeOptions& options = {});

}  // namespace rectree
