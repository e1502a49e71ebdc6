#include "rectree/tree.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "rectree/errors.hpp"
#include "rectree/parallel.hpp"

namespace rectree {

std::string_view to_string(LeafStatus status) {
  switch (status) {
    case LeafStatus::Expanded: return "expanded";
    case LeafStatus::NonRationalCutoff: return "nonrational_cutoff";
    case LeafStatus::DegenerateCutoff: return "degenerate_cutoff";
    case LeafStatus::DepthLimit: return "depth_limit";
    case LeafStatus::Merged: return "merged";
  }
  return "unknown";
}

std::string_view to_string(CutoffKind kind) {
  switch (kind) {
    case CutoffKind::None: return "none";
    case CutoffKind::Irrational: return "irrational";
    case CutoffKind::Complex: return "complex";
  }
  return "unknown";
}

namespace {

struct FrontierEntry {
  TreeNode* node;
  std::vector<Rational> window;
};

std::vector<Rational> shifted(const std::vector<Rational>& window, const Rational& next) {
  std::vector<Rational> out(window.begin() + 1, window.end());
  out.push_back(next);
  return out;
}

void apply_roots(TreeNode& node, const QuadraticRoots& roots) {
  switch (roots.kind) {
    case RootKind::TwoRational:
    case RootKind::OneRationalDouble:
      node.status = LeafStatus::Expanded;
      node.children.reserve(roots.roots.size());
      for (std::size_t i = 0; i < roots.roots.size(); ++i) {
        TreeNode child;
        child.value = roots.roots[i];
        child.multiplicity = roots.multiplicities[i];
        child.depth = node.depth + 1;
        node.children.push_back(std::move(child));
      }
      break;
    case RootKind::Irrational:
      node.status = LeafStatus::NonRationalCutoff;
      node.cutoff = CutoffKind::Irrational;
      break;
    case RootKind::Complex:
      node.status = LeafStatus::NonRationalCutoff;
      node.cutoff = CutoffKind::Complex;
      break;
    case RootKind::DegenerateLinear:
    case RootKind::Degenerate:
      node.status = LeafStatus::DegenerateCutoff;
      break;
  }
}

}  // namespace

RecurrenceTree build_tree(const Recurrence& r, std::span<const Rational> initial_window,
                          int max_depth, const TreeOptions& options) {
  const std::size_t k = r.order();
  if (initial_window.size() != k) throw BadWindow(k, initial_window.size());
  if (r.degree() != 2) {
    throw Unsupported("recurrence trees are only built for degree 2 (got degree " +
                      std::to_string(r.degree()) + ")");
  }
  if (max_depth < static_cast<int>(k)) {
    throw InvalidArgument("max_depth " + std::to_string(max_depth) +
                          " is shallower than the initial window");
  }

  RecurrenceTree tree{r, {initial_window.begin(), initial_window.end()}, {}, max_depth,
                      options.memoize};

  // Initial window as a single chain.
  TreeNode* tip = &tree.root;
  tip->value = initial_window[0];
  tip->depth = 1;
  for (std::size_t i = 1; i < k; ++i) {
    tip->status = LeafStatus::Expanded;
    TreeNode child;
    child.value = initial_window[i];
    child.depth = static_cast<int>(i) + 1;
    tip->children.push_back(std::move(child));
    tip = &tip->children.back();
  }

  std::vector<FrontierEntry> frontier;
  frontier.push_back({tip, tree.initial_window});
  const unsigned threads = options.threads == 0 ? worker_count() : options.threads;

  for (int depth = static_cast<int>(k); depth <= max_depth && !frontier.empty(); ++depth) {
    if (depth == max_depth) {
      for (auto& entry : frontier) entry.node->status = LeafStatus::DepthLimit;
      break;
    }

    if (options.memoize) {
      std::set<std::vector<Rational>> seen;
      std::vector<FrontierEntry> kept;
      kept.reserve(frontier.size());
      for (auto& entry : frontier) {
        if (seen.insert(entry.window).second) {
          kept.push_back(std::move(entry));
        } else {
          entry.node->status = LeafStatus::Merged;
        }
      }
      frontier = std::move(kept);
    }

    std::vector<QuadraticRoots> solved(frontier.size());
    parallel_for(
        frontier.size(),
        [&](std::size_t i) {
          const auto p = step_polynomial(r, frontier[i].window);
          solved[i] = solve_quadratic(p.p2, p.p1, p.p0);
        },
        threads);

    std::vector<FrontierEntry> next;
    next.reserve(frontier.size() * 2);
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      TreeNode& node = *frontier[i].node;
      apply_roots(node, solved[i]);
      for (auto& child : node.children) {
        next.push_back({&child, shifted(frontier[i].window, child.value)});
      }
    }
    frontier = std::move(next);
  }
  return tree;
}

void for_each_node(const RecurrenceTree& t,
                   const std::function<void(const TreeNode&, const TreeNode*,
                                            std::span<const Rational>)>& visit) {
  const std::size_t k = t.recurrence.order();
  std::vector<Rational> path;
  std::function<void(const TreeNode&, const TreeNode*)> walk = [&](const TreeNode& node,
                                                                   const TreeNode* parent) {
    path.push_back(node.value);
    std::span<const Rational> window;
    if (path.size() >= k) window = std::span<const Rational>(path).last(k);
    visit(node, parent, window);
    for (const auto& child : node.children) walk(child, &node);
    path.pop_back();
  };
  walk(t.root, nullptr);
}

std::vector<LevelStats> level_stats(const RecurrenceTree& t) {
  std::vector<std::vector<const TreeNode*>> levels;
  std::vector<const TreeNode*> current{&t.root};
  while (!current.empty()) {
    std::vector<const TreeNode*> next;
    for (const TreeNode* node : current) {
      for (const auto& child : node->children) next.push_back(&child);
    }
    levels.push_back(std::move(current));
    current = std::move(next);
  }

  std::vector<LevelStats> out;
  std::unordered_set<Rational, RationalHash> seen;
  bool rational_above = true;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    LevelStats stats;
    stats.depth = static_cast<int>(i) + 1;
    stats.total_nodes = levels[i].size();
    stats.all_rational_so_far = rational_above;
    std::set<Rational> distinct;
    for (const TreeNode* node : levels[i]) distinct.insert(node->value);
    stats.distinct_values = distinct.size();
    for (const auto& v : distinct) {
      if (!seen.contains(v)) stats.new_values.push_back(v);
    }
    for (const auto& v : distinct) seen.insert(v);
    for (const TreeNode* node : levels[i]) {
      if (node->status == LeafStatus::NonRationalCutoff) rational_above = false;
    }
    out.push_back(std::move(stats));
  }
  // A tree whose last level exists only as cut-off parents still reports
  // the missing level as non-rational.
  if (!rational_above && static_cast<int>(out.size()) < t.max_depth) {
    LevelStats missing;
    missing.depth = static_cast<int>(out.size()) + 1;
    missing.all_rational_so_far = false;
    out.push_back(std::move(missing));
  }
  return out;
}

bool is_rational(const RecurrenceTree& t) {
  bool ok = true;
  for_each_node(t, [&](const TreeNode& node, const TreeNode*, std::span<const Rational>) {
    if (node.status == LeafStatus::NonRationalCutoff) ok = false;
  });
  return ok;
}

bool is_rational_to_depth(const Recurrence& r, std::span<const Rational> initial_window,
                          int depth, const TreeOptions& options) {
  return is_rational(build_tree(r, initial_window, depth, options));
}

std::vector<Rational> extract_path(const RecurrenceTree& t, const PathChooser& chooser) {
  std::vector<Rational> path;
  const TreeNode* node = &t.root;
  const auto k = static_cast<int>(t.recurrence.order());
  path.push_back(node->value);
  while (!node->children.empty()) {
    if (node->depth < k) {
      node = &node->children.front();
      path.push_back(node->value);
      continue;
    }
    std::vector<Rational> candidates;
    for (const auto& child : node->children) candidates.push_back(child.value);
    const auto choice = chooser(node->depth + 1, candidates);
    if (!choice) break;
    const auto it = std::find_if(node->children.begin(), node->children.end(),
                                 [&](const TreeNode& c) { return c.value == *choice; });
    if (it == node->children.end()) {
      throw InvalidArgument("path chooser picked " + choice->str() + " which is not a child at depth " +
                            std::to_string(node->depth + 1));
    }
    node = &*it;
    path.push_back(node->value);
  }
  return path;
}

TreeAudit verify_tree_roots(const RecurrenceTree& t) {
  TreeAudit audit;
  for_each_node(t, [&](const TreeNode& node, const TreeNode*, std::span<const Rational> window) {
    if (node.depth < static_cast<int>(t.recurrence.order()) || node.children.empty()) return;
    const auto p = step_polynomial(t.recurrence, window);
    for (const auto& child : node.children) {
      ++audit.checked;
      if (!eval_quadratic(p.p2, p.p1, p.p0, child.value).is_zero()) ++audit.failures;
    }
  });
  return audit;
}

TreeAudit check_backtracking(const RecurrenceTree& t) {
  TreeAudit audit;
  for_each_node(t, [&](const TreeNode& node, const TreeNode* parent, std::span<const Rational>) {
    if (parent == nullptr || node.status != LeafStatus::Expanded) return;
    if (node.depth <= static_cast<int>(t.recurrence.order())) return;
    ++audit.checked;
    const bool found = std::any_of(node.children.begin(), node.children.end(),
                                   [&](const TreeNode& c) { return c.value == parent->value; });
    if (!found) ++audit.failures;
  });
  return audit;
}

std::size_t node_count(const RecurrenceTree& t) {
  std::size_t n = 0;
  for_each_node(t, [&](const TreeNode&, const TreeNode*, std::span<const Rational>) { ++n; });
  return n;
}

}  // namespace rectree
