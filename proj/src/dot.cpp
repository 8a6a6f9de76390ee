#include "lpterm/dot.hpp"

#include <sstream>

namespace lpterm {

namespace {

std::string escaped(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string node_label(const Node& n, const Program& p) {
  std::string label = "N" + std::to_string(n.id) + ": " + to_string(n.goal);
  if (n.status == NodeStatus::Failure) label += "\nfail";
  for (const CutRecord& c : n.cuts) {
    label += "\ncut " + p.clause_label(c.clause);
    if (c.flagged) label += " (L=1)";
  }
  if (!n.pruned.empty()) {
    label += "\nnot extended:";
    for (std::size_t c : n.pruned) label += " " + p.clause_label(c);
  }
  return label;
}

}  // namespace

std::string export_dot(const TreeResult& tree, const Program& p) {
  std::ostringstream os;
  os << "digraph sldnf {\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (const Node& n : tree.nodes) {
    os << "  n" << n.id << " [label=\"" << escaped(node_label(n, p)) << "\"";
    if (!n.cuts.empty()) os << ", color=red";
    if (n.status == NodeStatus::Success) os << ", peripheries=2";
    os << "];\n";
  }
  for (const Node& n : tree.nodes) {
    if (!n.parent) continue;
    os << "  n" << *n.parent << " -> n" << n.id;
    switch (n.edge.kind) {
      case EdgeKind::Resolution:
        os << " [label=\"" << escaped(p.clause_label(n.edge.clause)) << "\"]";
        break;
      case EdgeKind::NegationArc:
        os << " [style=dashed, arrowhead=empty]";
        break;
      case EdgeKind::NegationSucceeded:
        os << " [label=\"negation succeeds\"]";
        break;
      case EdgeKind::Root:
        break;
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace lpterm
