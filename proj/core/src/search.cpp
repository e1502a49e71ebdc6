#include "rectree/search.hpp"

#include <sstream>

#include "rectree/errors.hpp"
#include "rectree/parallel.hpp"
#include "rectree/recurrence.hpp"
#include "rectree/tree.hpp"

namespace rectree {

void SearchSpec::validate() const {
  for (const auto* r : {&A1, &A2, &B1, &B2}) {
    if (r == &B2 && enforce_A1_eq_B2) continue;
    if (r->size() == 0) throw InvalidArgument("search range is empty");
  }
  if (test_depth < 2) throw InvalidArgument("search test depth must be >= 2");
}

Rational discriminant_at_one(long A1, long A2, long B1, long B2) {
  const Rational b(A1 + A2);
  return b * b - Rational(4) * Rational(B1 + B2);
}

Rational level2_discriminant(const Coefficients& k, const Rational& initial_value) {
  const Rational& y = initial_value;
  const Rational b = Rational(k.A1) + Rational(k.A2) * y;
  return b * b - Rational(4) * y * y * (Rational(k.B1) + Rational(k.B2) * y);
}

namespace {

class Box {
public:
  explicit Box(const SearchSpec& spec) : spec_(spec) {}

  std::size_t size() const {
    std::size_t n = spec_.A1.size() * spec_.A2.size() * spec_.B1.size();
    return spec_.enforce_A1_eq_B2 ? n : n * spec_.B2.size();
  }

  Coefficients at(std::size_t index) const {
    Coefficients k;
    if (!spec_.enforce_A1_eq_B2) {
      k.B2 = spec_.B2.lo + static_cast<long>(index % spec_.B2.size());
      index /= spec_.B2.size();
    }
    k.B1 = spec_.B1.lo + static_cast<long>(index % spec_.B1.size());
    index /= spec_.B1.size();
    k.A2 = spec_.A2.lo + static_cast<long>(index % spec_.A2.size());
    index /= spec_.A2.size();
    k.A1 = spec_.A1.lo + static_cast<long>(index);
    if (spec_.enforce_A1_eq_B2) k.B2 = k.A1;
    return k;
  }

  std::size_t index_of(const Coefficients& k) const {
    std::size_t idx = static_cast<std::size_t>(k.A1 - spec_.A1.lo);
    idx = idx * spec_.A2.size() + static_cast<std::size_t>(k.A2 - spec_.A2.lo);
    idx = idx * spec_.B1.size() + static_cast<std::size_t>(k.B1 - spec_.B1.lo);
    if (!spec_.enforce_A1_eq_B2) idx = idx * spec_.B2.size() + static_cast<std::size_t>(k.B2 - spec_.B2.lo);
    return idx;
  }

private:
  const SearchSpec& spec_;
};

enum class Outcome { Hit, PrunedNonSquare, PrunedDegenerate, FailedDeeper };

struct Evaluated {
  Outcome outcome = Outcome::PrunedNonSquare;
  SearchHit hit;
};

Evaluated evaluate(const SearchSpec& spec, const Coefficients& k) {
  Evaluated out;
  const Recurrence r = make_first_order(k.A1, k.A2, k.B1, k.B2);
  const std::vector<Rational> window{spec.initial_value};
  const auto p = step_polynomial(r, window);
  const auto roots = solve_quadratic(p.p2, p.p1, p.p0);
  if (roots.kind == RootKind::Degenerate || roots.kind == RootKind::DegenerateLinear) {
    out.outcome = Outcome::PrunedDegenerate;
    return out;
  }
  if (!roots.is_rational()) {
    out.outcome = Outcome::PrunedNonSquare;
    return out;
  }
  TreeOptions opts;
  opts.threads = 1;
  const auto tree = build_tree(r, window, spec.test_depth, opts);
  if (!is_rational(tree)) {
    out.outcome = Outcome::FailedDeeper;
    return out;
  }
  out.outcome = Outcome::Hit;
  out.hit.coeffs = k;
  out.hit.verified_depth = spec.test_depth;
  out.hit.level2_roots = roots.roots;
  return out;
}

}  // namespace

SearchReport run_search(const SearchSpec& spec, const SearchOptions& options) {
  spec.validate();
  const Box box(spec);
  SearchReport report;
  report.spec = spec;
  std::size_t next = 0;
  if (options.resume) {
    if (!(options.resume->partial.spec == spec)) {
      throw InvalidArgument("checkpoint was written for a different search spec");
    }
    report = options.resume->partial;
    if (options.resume->last_scanned) next = box.index_of(*options.resume->last_scanned) + 1;
  }

  const std::size_t total = box.size();
  const std::size_t chunk = std::max<std::size_t>(1, options.checkpoint_every);
  while (next < total) {
    const std::size_t end = std::min(total, next + chunk);
    std::vector<Evaluated> results(end - next);
    parallel_for(
        results.size(), [&](std::size_t i) { results[i] = evaluate(spec, box.at(next + i)); },
        options.threads);
    for (auto& res : results) {
      ++report.scanned;
      switch (res.outcome) {
        case Outcome::Hit:
          report.hits.push_back(std::move(res.hit));
          break;
        case Outcome::PrunedNonSquare:
          ++report.pruned_at_level2;
          ++report.pruned_nonsquare;
          break;
        case Outcome::PrunedDegenerate:
          ++report.pruned_at_level2;
          ++report.pruned_degenerate;
          break;
        case Outcome::FailedDeeper:
          ++report.failed_deeper;
          break;
      }
    }
    next = end;
    if (options.on_checkpoint) options.on_checkpoint(SearchCheckpoint{box.at(end - 1), report});
  }
  return report;
}

std::string search_report_to_csv(const SearchReport& report) {
  std::ostringstream os;
  os << "A1,A2,B1,B2,verified_depth,level2_roots\n";
  for (const auto& h : report.hits) {
    os << h.coeffs.A1 << ',' << h.coeffs.A2 << ',' << h.coeffs.B1 << ',' << h.coeffs.B2 << ','
       << h.verified_depth << ',';
    for (std::size_t i = 0; i < h.level2_roots.size(); ++i) {
      if (i) os << ';';
      os << h.level2_roots[i].str();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace rectree
