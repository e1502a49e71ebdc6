#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <filesystem>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "rectree/analysis.hpp"
#include "rectree/errors.hpp"
#include "rectree/json.hpp"
#include "rectree/search.hpp"
#include "rectree/somos.hpp"
#include "rectree/tree.hpp"

namespace rectree::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

constexpr int kMaxSafeDepthOrder1 = 24;
constexpr int kMaxSafeDepthOrder3 = 12;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

void require_format(const std::string& format, std::initializer_list<const char*> allowed,
                    const char* command) {
  for (const char* f : allowed) {
    if (format == f) return;
  }
  throw UsageError("format '" + format + "' is not valid for '" + command + "'");
}

void guard_depth(int depth, std::size_t order, bool unsafe) {
  const int limit = order == 1 ? kMaxSafeDepthOrder1 : kMaxSafeDepthOrder3;
  if (depth > limit && !unsafe) {
    throw UsageError("depth " + std::to_string(depth) + " exceeds the safe limit " +
                     std::to_string(limit) + " for order-" + std::to_string(order) +
                     " trees; pass --unsafe to override");
  }
}

std::string join(const std::vector<Rational>& values, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].str();
  }
  return out;
}

std::vector<Rational> parse_window(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(Rational::parse(part));
    }
  }
  return out;
}

// ---- somos ---------------------------------------------------------------

struct SomosArgs {
  long c1 = 1, c2 = 1;
  int n = 20;
  std::string format = "text";
};

int cmd_somos(const SomosArgs& a, std::ostream& out) {
  require_format(a.format, {"text", "json", "csv", "bfile"}, "somos");
  const auto run = somos4({a.c1, a.c2}, a.n);
  if (a.format == "json") {
    out << Json(run).dump(2) << '\n';
  } else if (a.format == "csv") {
    out << "n,s,t,a\n";
    for (std::size_t i = 0; i < run.s.size(); ++i) {
      out << (i + 1) << ',' << run.s[i] << ',';
      if (i < run.t.size()) out << run.t[i];
      out << ',';
      if (i < run.a.size()) out << run.a[i];
      out << '\n';
    }
  } else if (a.format == "bfile") {
    out << to_bfile(run);
  } else {
    out << join(run.s) << '\n';
  }
  return kExitOk;
}

// ---- tree ----------------------------------------------------------------

struct TreeArgs {
  std::string family = "first-order";
  long A1 = 0, A2 = 0, B1 = 0, B2 = 0;
  long c1 = 1, c2 = 1;
  std::vector<std::string> init;
  int depth = 0;
  std::string format = "text";
  bool memoize = false;
  bool unsafe = false;
};

Recurrence make_family(const TreeArgs& a) {
  if (a.family == "first-order") return make_first_order(a.A1, a.A2, a.B1, a.B2);
  if (a.family == "somos-ratio") return make_somos_ratio_quadratic({a.c1, a.c2});
  if (a.family == "somos-order3") return make_order3_unfolding({a.c1, a.c2});
  throw UsageError("unknown family '" + a.family + "'");
}

void print_tree_text(const RecurrenceTree& tree, const std::vector<LevelStats>& stats,
                     std::ostream& out) {
  out << "recurrence: " << Json(tree.recurrence).dump() << '\n';
  out << "initial window: " << join(tree.initial_window) << ", max depth " << tree.max_depth << '\n';

  std::vector<std::set<Rational>> values(stats.size());
  std::size_t irrational = 0, complex = 0, degenerate = 0, merged = 0;
  for_each_node(tree, [&](const TreeNode& node, const TreeNode*, std::span<const Rational>) {
    values[node.depth - 1].insert(node.value);
    if (node.status == LeafStatus::NonRationalCutoff) {
      (node.cutoff == CutoffKind::Irrational ? irrational : complex) += 1;
    } else if (node.status == LeafStatus::DegenerateCutoff) {
      ++degenerate;
    } else if (node.status == LeafStatus::Merged) {
      ++merged;
    }
  });

  std::vector<Rational> non_integers;
  for (const auto& s : stats) {
    out << "level " << s.depth << " (" << s.total_nodes << " nodes, " << s.new_values.size()
        << " new):";
    for (const auto& v : values[s.depth - 1]) {
      out << ' ' << v;
      if (!v.is_integer()) {
        out << '*';
        non_integers.push_back(v);
      }
    }
    out << '\n';
  }
  if (!non_integers.empty()) out << "* non-integer rationals present\n";
  out << "cutoffs: irrational=" << irrational << " complex=" << complex
      << " degenerate=" << degenerate;
  if (tree.memoized) out << " merged=" << merged;
  out << '\n' << "rational: " << (is_rational(tree) ? "yes" : "no") << '\n';
}

int cmd_tree(const TreeArgs& a, std::ostream& out) {
  require_format(a.format, {"text", "json", "csv", "dot"}, "tree");
  const Recurrence r = make_family(a);
  std::vector<Rational> window = parse_window(a.init);
  if (window.empty()) window.assign(r.order(), Rational(1));
  const int depth = a.depth > 0 ? a.depth : (r.order() == 1 ? 12 : 8);
  guard_depth(depth, r.order(), a.unsafe);

  TreeOptions opts;
  opts.memoize = a.memoize;
  const auto tree = build_tree(r, window, depth, opts);
  const auto stats = level_stats(tree);
  if (a.format == "json") {
    Json j = tree;
    j["levels"] = stats;
    out << j.dump(2) << '\n';
  } else if (a.format == "csv") {
    out << level_stats_to_csv(stats);
  } else if (a.format == "dot") {
    out << tree_to_dot(tree);
  } else {
    print_tree_text(tree, stats, out);
  }
  return kExitOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  long c1 = 1, c2 = 1;
  int n = 30;
  int closed_form_depth = 16;
  int tree_depth = 10;
  std::string format = "text";
  bool unsafe = false;
};

struct CheckLine {
  std::string name;
  std::string status;  // PASS, FAIL, ERROR
  std::string detail;
};

template <class Fn>
CheckLine run_check(std::string name, Fn&& fn) {
  CheckLine line{std::move(name), "FAIL", {}};
  try {
    auto [ok, detail] = fn();
    line.status = ok ? "PASS" : "FAIL";
    line.detail = std::move(detail);
  } catch (const ZeroDivision& e) {
    line.status = "ERROR";
    line.detail = std::string("ZeroDivision: ") + e.what();
  } catch (const Error& e) {
    line.status = "ERROR";
    line.detail = e.what();
  }
  return line;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  require_format(a.format, {"text", "json"}, "verify");
  guard_depth(a.tree_depth, 1, a.unsafe);
  const ParamPoint c{a.c1, a.c2};
  const std::string n_text = "n <= " + std::to_string(a.n);

  std::vector<CheckLine> lines;
  lines.push_back(run_check("integrality", [&] {
    const auto run = somos4(c, a.n);
    return std::pair{is_integer_sequence(run.s), "s_c(1.." + std::to_string(a.n) + ")"};
  }));
  lines.push_back(run_check("claim1", [&] { return std::pair{check_claim1(c, a.n), n_text}; }));
  lines.push_back(run_check("claim2", [&] { return std::pair{check_claim2(c, a.n), n_text}; }));
  lines.push_back(
      run_check("t-identity", [&] { return std::pair{check_T_identity(c, a.n), n_text}; }));
  lines.push_back(run_check("closed-form", [&] {
    const auto report = verify_closed_form_branch(c, a.closed_form_depth);
    std::string detail = "depth " + std::to_string(report.depth_checked);
    if (!report.matched) detail += ": " + report.message;
    return std::pair{report.matched, detail};
  }));
  lines.push_back(run_check("level-stats", [&] {
    const Rational one(1);
    const auto tree = build_tree(make_somos_ratio_quadratic(c), std::vector<Rational>{one},
                                 a.tree_depth, TreeOptions{});
    const auto stats = level_stats(tree);
    bool ok = true;
    std::string detail = "one new value per level to depth " + std::to_string(a.tree_depth);
    for (const auto& s : stats) {
      if (s.depth >= 2 && s.new_values.size() != 1) {
        ok = false;
        detail = "level " + std::to_string(s.depth) + " has " +
                 std::to_string(s.new_values.size()) + " new values";
        break;
      }
    }
    if (static_cast<int>(stats.size()) < a.tree_depth) {
      ok = false;
      detail = "tree stopped at depth " + std::to_string(stats.size());
    }
    return std::pair{ok, detail};
  }));

  bool all_pass = true;
  for (const auto& l : lines) all_pass = all_pass && l.status == "PASS";

  if (a.format == "json") {
    Json checks = Json::array();
    for (const auto& l : lines) {
      checks.push_back(Json{{"check", l.name}, {"status", l.status}, {"detail", l.detail}});
    }
    out << Json{{"c", c}, {"n", a.n}, {"all_pass", all_pass}, {"checks", checks}}.dump(2) << '\n';
  } else {
    for (const auto& l : lines) {
      out << std::left << std::setw(12) << l.name << ' ' << std::setw(5) << l.status << ' '
          << l.detail << '\n';
    }
    out << (all_pass ? "all checks passed" : "some checks did not pass") << '\n';
  }
  return all_pass ? kExitOk : kExitFailure;
}

// ---- search --------------------------------------------------------------

struct SearchArgs {
  long a1_min = -2, a1_max = 6;
  long a2_min = -2, a2_max = 6;
  long b1_min = -2, b1_max = 9;
  long b2_min = -2, b2_max = 9;
  bool symmetric = true;
  std::string init = "1";
  int depth = 8;
  std::string format = "text";
  std::string resume;
  std::size_t checkpoint_every = 512;
  bool unsafe = false;
};

int cmd_search(const SearchArgs& a, std::ostream& out) {
  require_format(a.format, {"text", "json", "csv"}, "search");
  guard_depth(a.depth, 1, a.unsafe);
  SearchSpec spec;
  spec.A1 = {a.a1_min, a.a1_max};
  spec.A2 = {a.a2_min, a.a2_max};
  spec.B1 = {a.b1_min, a.b1_max};
  spec.B2 = {a.b2_min, a.b2_max};
  spec.enforce_A1_eq_B2 = a.symmetric;
  spec.initial_value = Rational::parse(a.init);
  spec.test_depth = a.depth;

  SearchOptions opts;
  opts.checkpoint_every = a.checkpoint_every;
  if (!a.resume.empty()) {
    if (std::filesystem::exists(a.resume)) {
      std::ifstream in(a.resume);
      opts.resume = Json::parse(in).get<SearchCheckpoint>();
    }
    opts.on_checkpoint = [path = a.resume](const SearchCheckpoint& cp) {
      const std::string tmp = path + ".tmp";
      {
        std::ofstream f(tmp, std::ios::trunc);
        f << Json(cp).dump(2) << '\n';
      }
      std::filesystem::rename(tmp, path);
    };
  }
  const auto report = run_search(spec, opts);

  if (a.format == "json") {
    out << Json(report).dump(2) << '\n';
  } else if (a.format == "csv") {
    out << search_report_to_csv(report);
  } else {
    out << "scanned " << report.scanned << ", pruned at level 2 " << report.pruned_at_level2
        << " (non-square " << report.pruned_nonsquare << ", degenerate "
        << report.pruned_degenerate << "), failed deeper " << report.failed_deeper << ", hits "
        << report.hits.size() << " (verified to depth " << spec.test_depth << ")\n";
    for (const auto& h : report.hits) {
      out << "A1=" << h.coeffs.A1 << " A2=" << h.coeffs.A2 << " B1=" << h.coeffs.B1
          << " B2=" << h.coeffs.B2 << "  a(2) in {" << join(h.level2_roots, ", ") << "}\n";
    }
  }
  return kExitOk;
}

// ---- conjecture ----------------------------------------------------------

struct ConjectureArgs {
  long c1 = 1, c2 = 1;
  int depth = 6;
  int horizon = 20;
  std::string format = "text";
  bool unsafe = false;
};

int cmd_conjecture(const ConjectureArgs& a, std::ostream& out) {
  require_format(a.format, {"text", "json"}, "conjecture");
  guard_depth(a.depth, 3, a.unsafe);
  const auto report = check_conjecture({a.c1, a.c2}, a.depth, a.horizon);
  if (a.format == "json") {
    out << Json(report).dump(2) << '\n';
    return kExitOk;
  }
  out << "c = (" << a.c1 << ", " << a.c2 << "), depth " << a.depth << ", horizon " << a.horizon
      << '\n'
      << "values checked: " << report.values_checked << '\n'
      << "all factorable: " << (report.all_factorable ? "yes" : "no") << '\n';
  auto indices = [](const std::vector<int>& v) {
    if (v.empty()) return std::string("1");
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += "*";
      s += "s(" + std::to_string(v[i]) + ")";
    }
    return s;
  };
  for (const auto& [value, w] : report.witnesses) {
    out << "  " << value << " = " << indices(w.numerator);
    if (!w.denominator.empty()) out << " / " << indices(w.denominator);
    out << '\n';
  }
  if (!report.failures.empty()) {
    out << "not factorable within horizon: " << join(report.failures) << '\n';
  }
  out << "convention: " << report.convention << '\n';
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact recurrence-tree explorer", "rectree"};
  app.require_subcommand(1);

  SomosArgs somos_args;
  auto* somos = app.add_subcommand("somos", "Generalized Somos-4 terms");
  somos->add_option("--c1", somos_args.c1, "c1")->capture_default_str();
  somos->add_option("--c2", somos_args.c2, "c2")->capture_default_str();
  somos->add_option("-n", somos_args.n, "number of terms")->capture_default_str();
  somos->add_option("--format", somos_args.format, "text|json|csv|bfile")->capture_default_str();

  TreeArgs tree_args;
  auto* tree = app.add_subcommand("tree", "Build a recurrence tree");
  tree->add_option("--family", tree_args.family, "first-order|somos-ratio|somos-order3")
      ->capture_default_str();
  tree->add_option("--A1", tree_args.A1);
  tree->add_option("--A2", tree_args.A2);
  tree->add_option("--B1", tree_args.B1);
  tree->add_option("--B2", tree_args.B2);
  tree->add_option("--c1", tree_args.c1)->capture_default_str();
  tree->add_option("--c2", tree_args.c2)->capture_default_str();
  tree->add_option("--init", tree_args.init, "initial window, e.g. 1 or 1,1,1 (default all ones)");
  tree->add_option("--depth", tree_args.depth, "max depth (default 12 for order 1, 8 for order 3)");
  tree->add_option("--format", tree_args.format, "text|json|csv|dot")->capture_default_str();
  tree->add_flag("--memoize", tree_args.memoize, "collapse repeated windows per level");
  tree->add_flag("--unsafe", tree_args.unsafe, "allow depths beyond the safety limit");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check the Somos identities and tree claims");
  verify->add_option("--c1", verify_args.c1)->capture_default_str();
  verify->add_option("--c2", verify_args.c2)->capture_default_str();
  verify->add_option("-n", verify_args.n, "sequence length checked")->capture_default_str();
  verify->add_option("--closed-form-depth", verify_args.closed_form_depth)->capture_default_str();
  verify->add_option("--tree-depth", verify_args.tree_depth)->capture_default_str();
  verify->add_option("--format", verify_args.format, "text|json")->capture_default_str();
  verify->add_flag("--unsafe", verify_args.unsafe);

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Scan first-order coefficient boxes for rational trees");
  search->add_option("--A1-min", search_args.a1_min)->capture_default_str();
  search->add_option("--A1-max", search_args.a1_max)->capture_default_str();
  search->add_option("--A2-min", search_args.a2_min)->capture_default_str();
  search->add_option("--A2-max", search_args.a2_max)->capture_default_str();
  search->add_option("--B1-min", search_args.b1_min)->capture_default_str();
  search->add_option("--B1-max", search_args.b1_max)->capture_default_str();
  search->add_option("--B2-min", search_args.b2_min)->capture_default_str();
  search->add_option("--B2-max", search_args.b2_max)->capture_default_str();
  search->add_flag("--symmetric,!--no-symmetric", search_args.symmetric,
                   "scan only B2 = A1 (default on)");
  search->add_option("--init", search_args.init, "initial value a(1)")->capture_default_str();
  search->add_option("--depth", search_args.depth, "test depth")->capture_default_str();
  search->add_option("--format", search_args.format, "text|json|csv")->capture_default_str();
  search->add_option("--resume", search_args.resume, "checkpoint file (read if present, then updated)");
  search->add_option("--checkpoint-every", search_args.checkpoint_every)->capture_default_str();
  search->add_flag("--unsafe", search_args.unsafe);

  ConjectureArgs conj_args;
  auto* conj = app.add_subcommand("conjecture", "Factor order-3 tree values over Somos-4 terms");
  conj->add_option("--c1", conj_args.c1)->capture_default_str();
  conj->add_option("--c2", conj_args.c2)->capture_default_str();
  conj->add_option("--depth", conj_args.depth)->capture_default_str();
  conj->add_option("--horizon", conj_args.horizon)->capture_default_str();
  conj->add_option("--format", conj_args.format, "text|json")->capture_default_str();
  conj->add_flag("--unsafe", conj_args.unsafe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*somos) return cmd_somos(somos_args, out);
    if (*tree) return cmd_tree(tree_args, out);
    if (*verify) return cmd_verify(verify_args, out);
    if (*search) return cmd_search(search_args, out);
    if (*conj) return cmd_conjecture(conj_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ZeroDivision& e) {
    err << "error: ZeroDivision at index " << e.index() << ": " << e.what() << '\n';
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const nlohmann::json::exception& e) {
    err << "error: bad checkpoint: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"rectree"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace rectree::cli
