#include <sstream>

#include "rectree/tree.hpp"

namespace rectree {

namespace {

void emit_dot(const TreeNode& node, std::size_t& next_id, std::size_t id, std::ostringstream& os) {
  os << "  n" << id << " [label=\"" << node.value.str();
  if (node.multiplicity > 1) os << " (x" << node.multiplicity << ")";
  os << "\"";
  switch (node.status) {
    case LeafStatus::NonRationalCutoff:
      os << ", shape=box, color=red, tooltip=\"" << to_string(node.cutoff) << "\"";
      break;
    case LeafStatus::DegenerateCutoff:
      os << ", shape=box, color=orange";
      break;
    case LeafStatus::Merged:
      os << ", style=dashed";
      break;
    default:
      break;
  }
  os << "];\n";
  for (const auto& child : node.children) {
    const std::size_t child_id = next_id++;
    os << "  n" << id << " -> n" << child_id << ";\n";
    emit_dot(child, next_id, child_id, os);
  }
}

}  // namespace

std::string tree_to_dot(const RecurrenceTree& t) {
  std::ostringstream os;
  os << "digraph recurrence_tree {\n  node [shape=ellipse];\n";
  std::size_t next_id = 1;
  emit_dot(t.root, next_id, 0, os);
  os << "}\n";
  return os.str();
}

std::string level_stats_to_csv(std::span<const LevelStats> stats) {
  std::ostringstream os;
  os << "depth,total_nodes,distinct_values,new_value_count,new_values,all_rational_so_far\n";
  for (const auto& s : stats) {
    os << s.depth << ',' << s.total_nodes << ',' << s.distinct_values << ',' << s.new_values.size()
       << ',';
    for (std::size_t i = 0; i < s.new_values.size(); ++i) {
      if (i) os << ';';
      os << s.new_values[i].str();
    }
    os << ',' << (s.all_rational_so_far ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace rectree
