#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rectree/exact.hpp"

namespace rectree {

struct IntRange {
  long lo = 0;
  long hi = 0;

  std::size_t size() const { return hi < lo ? 0 : static_cast<std::size_t>(hi - lo + 1); }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct SearchSpec {
  IntRange A1, A2, B1, B2;
  /// Scan B2 = A1 and ignore the B2 range.
  bool enforce_A1_eq_B2 = true;
  Rational initial_value{1};
  int test_depth = 8;

  /// Throws InvalidArgument on empty ranges or test_depth < 2.
  void validate() const;
  friend bool operator==(const SearchSpec&, const SearchSpec&) = default;
};

struct Coefficients {
  long A1 = 0, A2 = 0, B1 = 0, B2 = 0;
  friend auto operator<=>(const Coefficients&, const Coefficients&) = default;
};

struct SearchHit {
  Coefficients coeffs;
  int verified_depth = 0;
  /// Depth-2 values below the initial value, ascending.
  std::vector<Rational> level2_roots;
};

/// scanned = hits + pruned_at_level2 + failed_deeper, and
/// pruned_at_level2 = pruned_nonsquare + pruned_degenerate.
struct SearchReport {
  SearchSpec spec;
  std::vector<SearchHit> hits;
  std::size_t scanned = 0;
  std::size_t pruned_at_level2 = 0;
  std::size_t pruned_nonsquare = 0;
  std::size_t pruned_degenerate = 0;
  std::size_t failed_deeper = 0;
};

struct SearchCheckpoint {
  std::optional<Coefficients> last_scanned;
  SearchReport partial;
};

struct SearchOptions {
  unsigned threads = 0;
  std::optional<SearchCheckpoint> resume;
  std::size_t checkpoint_every = 512;
  std::function<void(const SearchCheckpoint&)> on_checkpoint;
};

/// (A1+A2)^2 - 4(B1+B2): discriminant of the depth-2 quadratic from a(1) = 1.
Rational discriminant_at_one(long A1, long A2, long B1, long B2);

/// Discriminant of the depth-2 quadratic from an arbitrary initial value.
Rational level2_discriminant(const Coefficients& k, const Rational& initial_value);

/// Scans the coefficient box in lexicographic (A1, A2, B1, B2) order.
SearchReport run_search(const SearchSpec& spec, const SearchOptions& options = {});

/// A1,A2,B1,B2,verified_depth,level2_roots
std::string search_report_to_csv(const SearchReport& report);

}  // namespace rectree
