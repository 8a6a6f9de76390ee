#ifndef LPTERM_ENGINE_HPP
#define LPTERM_ENGINE_HPP

#include <cstddef>
#include <iterator>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lpterm/config.hpp"
#include "lpterm/program.hpp"
#include "lpterm/unify.hpp"

namespace lpterm {

/// Node ids are global across all SLDNF* trees of one construction and
/// increase monotonically in creation order.
using NodeId = std::size_t;

struct AncestorEntry {
  NodeId node;
  Atom atom;
};

/// Persistent set of (node, atom) pairs naming the ancestor subgoals of a
/// literal. Extending a list shares the tail, and entries are kept in
/// descending node order because a new entry is always the newest node.
class AncestorList {
  struct Cell {
    AncestorEntry entry;
    std::shared_ptr<const Cell> next;
    std::size_t size;
  };

 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = AncestorEntry;
    using difference_type = std::ptrdiff_t;
    using pointer = const AncestorEntry*;
    using reference = const AncestorEntry&;

    const_iterator() = default;
    reference operator*() const { return cell_->entry; }
    pointer operator->() const { return &cell_->entry; }
    const_iterator& operator++() {
      cell_ = cell_->next.get();
      return *this;
    }
    const_iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const const_iterator&, const const_iterator&) = default;

   private:
    friend class AncestorList;
    explicit const_iterator(const Cell* cell) : cell_(cell) {}
    const Cell* cell_ = nullptr;
  };

  AncestorList() = default;

  /// This list plus (node, atom); `node` must exceed every node already held.
  AncestorList with(NodeId node, Atom atom) const;

  const AncestorEntry* find(NodeId node) const;
  bool contains(NodeId node) const { return find(node) != nullptr; }
  std::size_t size() const { return head_ ? head_->size : 0; }
  bool empty() const { return !head_; }
  std::vector<NodeId> node_ids() const;

  const_iterator begin() const { return const_iterator(head_.get()); }
  const_iterator end() const { return const_iterator(nullptr); }

 private:
  std::shared_ptr<const Cell> head_;
};

enum class EdgeKind {
  Root,
  /// a clause resolved the selected positive literal of the parent
  Resolution,
  /// link from a node selecting a negative literal to its subsidiary root
  NegationArc,
  /// the negative literal of the parent succeeded and was removed
  NegationSucceeded,
};

struct Edge {
  EdgeKind kind = EdgeKind::Root;
  /// Clause index, for resolution edges.
  std::size_t clause = 0;
  /// The mgu bindings of this step (the substitution log entries).
  std::vector<Binding> bindings;
};

enum class NodeStatus {
  /// has (or had) children
  Internal,
  /// empty goal
  Success,
  /// no clause applied, or the negative literal failed
  Failure,
  /// never expanded (construction stopped early)
  Unexpanded,
};

enum class NegationOutcome {
  None,
  /// the subsidiary tree found a success leaf
  Fails,
  /// the subsidiary tree was exhausted without loop-check cuts
  Succeeds,
  /// exhausted, but some of its derivations were cut
  ApproxSucceeds,
};

/// A detected repetition window: loop goals g_1 < ... < g_r sharing one
/// clause, the last of which is the node about to be expanded.
struct Window {
  std::vector<NodeId> nodes;
  std::size_t clause = 0;
  /// The derivation prefix from the main root to g_r passes a negation step.
  bool negation_on_prefix = false;
};

struct CutRecord {
  std::size_t clause = 0;
  Window window;
  bool flagged = false;
};

struct Node {
  NodeId id = 0;
  std::vector<Literal> goal;
  /// One ancestor list per goal literal.
  std::vector<AncestorList> ancestors;
  std::optional<NodeId> parent;
  Edge edge;
  /// Which SLDNF* tree the node belongs to; 0 is the main tree.
  std::size_t tree = 0;
  std::shared_ptr<const InputVarSet> inputs;

  NodeStatus status = NodeStatus::Unexpanded;
  std::vector<NodeId> children;
  /// Clauses skipped here by the loop check.
  std::vector<CutRecord> cuts;
  /// Clauses never tried because the enclosing subsidiary tree stopped at
  /// its first success leaf.
  std::vector<std::size_t> pruned;
  /// For a node selecting a negative literal: root of the subsidiary tree.
  std::optional<NodeId> subsidiary;
  NegationOutcome negation = NegationOutcome::None;

  const Literal& selected() const { return goal.front(); }
  bool is_input(VarId v) const { return inputs && inputs->count(v) != 0; }
};

/// Kind of a cut-policy answer for one candidate clause.
struct CutDecision {
  enum class Kind { Allow, Skip, Abort };
  Kind kind = Kind::Allow;
  /// Skip only: whether the skip makes the answer approximate (sets L).
  bool set_flag = false;
  /// Abort only: non-termination is proven rather than guessed.
  bool exact = false;
  std::optional<Window> window;

  static CutDecision allow(std::optional<Window> w = std::nullopt) {
    return {Kind::Allow, false, false, std::move(w)};
  }
  static CutDecision skip(Window w, bool set_flag) {
    return {Kind::Skip, set_flag, false, std::move(w)};
  }
  static CutDecision abort(Window w, bool exact) {
    return {Kind::Abort, false, exact, std::move(w)};
  }
};

/// Read-only view of a construction in progress, handed to the cut policy.
class TreeView {
 public:
  TreeView(const Program& program, const Config& config,
           const std::vector<Node>& nodes, const std::vector<NodeId>& path,
           const bool& flag)
      : program_(program), config_(config), nodes_(nodes), path_(path),
        flag_(flag) {}

  const Program& program() const { return program_; }
  const Config& config() const { return config_; }
  const Node& node(NodeId id) const { return nodes_.at(id); }
  std::size_t node_count() const { return nodes_.size(); }
  /// Current derivation: the main root down to the node being expanded,
  /// crossing negation arcs.
  std::span<const NodeId> path() const { return path_; }
  /// Position of `id` on the current path, if it is there.
  std::optional<std::size_t> position_of(NodeId id) const;
  /// The edge leaving path position `pos` towards `pos + 1`.
  const Edge& edge_after(std::size_t pos) const;
  /// The flag L: some cut made the answer approximate.
  bool flag() const { return flag_; }

 private:
  const Program& program_;
  const Config& config_;
  const std::vector<Node>& nodes_;
  const std::vector<NodeId>& path_;
  const bool& flag_;
};

class CutPolicy {
 public:
  virtual ~CutPolicy() = default;
  /// Called before `clause` is applied to the selected literal of `node`.
  virtual CutDecision consult(const TreeView& view, NodeId node,
                              std::size_t clause) = 0;
};

/// Applies every clause; used for plain (unchecked) evaluation.
class NoCutPolicy final : public CutPolicy {
 public:
  CutDecision consult(const TreeView&, NodeId, std::size_t) override {
    return CutDecision::allow();
  }
};

struct TreeStats {
  std::size_t nodes = 0;
  std::size_t cuts = 0;
  std::size_t flagged_cuts = 0;
  std::size_t windows = 0;
  std::size_t negation_arcs = 0;
  std::size_t success_leaves = 0;
};

struct AbortInfo {
  Window window;
  bool exact = false;
};

struct TreeResult {
  std::vector<Node> nodes;
  TreeStats stats;
  /// The flag L.
  bool flag = false;
  /// Set when the policy stopped the construction.
  std::optional<AbortInfo> abort;

  const Node& root() const { return nodes.front(); }
};

class EngineError : public std::runtime_error {
 public:
  enum class Kind { Floundering, ResourceExceeded };
  EngineError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Fresh-variable supply for renaming clauses apart.
class FreshVariables {
 public:
  explicit FreshVariables(VarId first) : next_(first.value) {}
  Term make(const std::string& base);
  Clause rename(const Clause& c);
  VarId peek() const { return {next_}; }

 private:
  std::uint64_t next_;
};

/// Root goal for a query, and its input variables.
std::pair<std::vector<Literal>, InputVarSet> initial_goal(const Query& q);

/// One derivation step: resolve the selected positive literal of `n` with a
/// renamed-apart copy of `c`. Returns nullopt when the head does not unify.
/// The child's id, parent and tree fields are filled from `n` and `child_id`.
std::optional<Node> expand_step(const Node& n, const Clause& c,
                                FreshVariables& fresh, NodeId child_id,
                                bool occurs_check = true);

/// Builds the generalized SLDNF-tree for `q` under depth-first, left-most
/// control, consulting `policy` before each clause application.
///
/// Throws EngineError on floundering or when more than `cfg.max_nodes`
/// nodes would be created.
TreeResult construct(const Program& p, const Query& q, const Config& cfg,
                     CutPolicy& policy);

}  // namespace lpterm

#endif  // LPTERM_ENGINE_HPP
