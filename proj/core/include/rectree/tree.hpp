#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rectree/exact.hpp"
#include "rectree/recurrence.hpp"

namespace rectree {

enum class LeafStatus {
  Expanded,
  NonRationalCutoff,  // the next term leaves Q; see TreeNode::cutoff
  DegenerateCutoff,   // leading coefficient vanished at this window
  DepthLimit,
  Merged,             // memoized mode only: same window already expanded at this depth
};

enum class CutoffKind { None, Irrational, Complex };

std::string_view to_string(LeafStatus status);
std::string_view to_string(CutoffKind kind);

struct TreeNode {
  Rational value;
  int multiplicity = 1;
  int depth = 1;
  LeafStatus status = LeafStatus::DepthLimit;
  CutoffKind cutoff = CutoffKind::None;
  std::vector<TreeNode> children;
};

struct TreeOptions {
  /// Collapse nodes that share their window with an earlier node at the same
  /// depth. Value statistics per level are unchanged; node counts shrink.
  bool memoize = false;
  /// 0 = worker_count().
  unsigned threads = 0;
};

/// A complete tree of root choices. Depth 1 holds the first initial value;
/// for order k the first k levels are the initial window as a single chain
/// and branching starts at depth k + 1.
struct RecurrenceTree {
  Recurrence recurrence;
  std::vector<Rational> initial_window;
  TreeNode root;
  int max_depth = 1;
  bool memoized = false;
};

struct LevelStats {
  int depth = 0;
  std::size_t total_nodes = 0;
  std::size_t distinct_values = 0;
  /// Values never seen at any shallower depth, ascending.
  std::vector<Rational> new_values;
  /// No node above this depth was cut off for leaving Q.
  bool all_rational_so_far = true;
};

/// Breadth-first expansion to max_depth.
/// Throws BadWindow, Unsupported (degree != 2), InvalidArgument (max_depth < order).
RecurrenceTree build_tree(const Recurrence& r, std::span<const Rational> initial_window,
                          int max_depth, const TreeOptions& options = {});

std::vector<LevelStats> level_stats(const RecurrenceTree& t);

/// True iff no node down to `depth` is a NonRationalCutoff.
bool is_rational_to_depth(const Recurrence& r, std::span<const Rational> initial_window,
                          int depth, const TreeOptions& options = {});
bool is_rational(const RecurrenceTree& t);

/// Picks one of the sorted candidate values for the term at `depth`, or
/// returns nothing to stop the walk.
using PathChooser =
    std::function<std::optional<Rational>(int depth, std::span<const Rational> candidates)>;

/// Root-to-leaf path following the chooser. Initial-window chain nodes are
/// taken without consulting it. Throws InvalidArgument if the chooser names
/// a value that is not a child.
std::vector<Rational> extract_path(const RecurrenceTree& t, const PathChooser& chooser);

/// Visits every node with the window that was used to expand it (empty for
/// chain nodes above depth k).
void for_each_node(const RecurrenceTree& t,
                   const std::function<void(const TreeNode& node, const TreeNode* parent,
                                            std::span<const Rational> window)>& visit);

struct TreeAudit {
  std::size_t checked = 0;
  std::size_t failures = 0;
  bool ok() const { return failures == 0; }
};

/// Substitutes every child into its parent's step polynomial; all must be 0.
TreeAudit verify_tree_roots(const RecurrenceTree& t);

/// For every expanded node v with a parent u, checks u.value is among v's
/// children. Holds exactly for FirstOrderQuadratic with A1 = B2.
TreeAudit check_backtracking(const RecurrenceTree& t);

std::size_t node_count(const RecurrenceTree& t);

/// Graphviz rendering.
std::string tree_to_dot(const RecurrenceTree& t);
/// depth,total_nodes,distinct_values,new_value_count,new_values,all_rational_so_far
std::string level_stats_to_csv(std::span<const LevelStats> stats);

}  // namespace rectree
