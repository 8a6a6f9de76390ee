#ifndef LPTERM_PROGRAM_HPP
#define LPTERM_PROGRAM_HPP

#include <map>
#include <string>
#include <vector>

#include "lpterm/term.hpp"

namespace lpterm {

/// A finite, ordered set of clauses plus the indexes derived from it.
///
/// Clause order is the textual order. Predicates are keyed by name/arity and
/// listed in order of first appearance (heads and bodies alike).
class Program {
 public:
  Program() = default;
  explicit Program(std::vector<Clause> clauses);

  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(std::size_t index) const { return clauses_.at(index); }

  /// Indices of the clauses whose head has this predicate, in text order.
  const std::vector<std::size_t>& clauses_for(const PredicateKey& key) const;
  bool defines(const PredicateKey& key) const;

  /// Every predicate symbol occurring in the program.
  const std::vector<PredicateKey>& predicates() const { return predicates_; }

  /// Constants of the Herbrand universe, sorted. When the program has no
  /// constant, one synthetic constant is supplied and `has_synthetic_constant`
  /// reports it.
  const std::vector<std::string>& constants() const { return constants_; }
  bool has_synthetic_constant() const { return synthetic_constant_; }
  /// Function symbols (name/arity, arity >= 1), sorted.
  const std::vector<PredicateKey>& functions() const { return functions_; }

  /// Largest variable id used by any clause.
  VarId max_var_id() const { return max_var_; }

  /// Human-facing clause name, e.g. `C_p2` for the second clause of p/1.
  /// The predicate initial is used unless two predicates share it.
  const std::string& clause_label(std::size_t index) const {
    return labels_.at(index);
  }

 private:
  std::vector<Clause> clauses_;
  std::map<PredicateKey, std::vector<std::size_t>> by_predicate_;
  std::vector<PredicateKey> predicates_;
  std::vector<std::string> constants_;
  std::vector<PredicateKey> functions_;
  std::vector<std::string> labels_;
  bool synthetic_constant_ = false;
  VarId max_var_{};
};

/// Per-argument mode flags of a query.
struct ModePattern {
  std::vector<bool> input;

  std::size_t input_count() const;
  bool is_moded() const { return input_count() > 0; }
  friend bool operator==(const ModePattern&, const ModePattern&) = default;
};

/// A top-goal atom together with its mode pattern. Input-mode positions hold
/// distinct variables (the input variables) that occur nowhere else.
struct Query {
  Atom atom;
  ModePattern pattern;

  /// Variables standing at input-mode positions, in argument order.
  std::vector<VarId> input_variables() const;
  /// Throws std::invalid_argument if the invariants above are violated.
  void validate() const;
};

/// Renders `p(@I,V2)` style text: input positions carry an `@` marker.
std::string to_string(const Query& q);

/// Analysis answer. Ordered from "surely loops" to "surely halts".
enum class Verdict {
  NonTerminating = 0,
  MostLikelyNonTerminating = 1,
  MostLikelyTerminating = 2,
  Terminating = 3,
};

/// Output token, e.g. MOST_LIKELY_TERMINATING.
std::string_view verdict_token(Verdict v);
bool is_terminating_side(Verdict v);

/// For each predicate, the maximum nesting depth of each argument position
/// over the heads of its clauses. Clause-less predicates get all zeros.
using PmaxTable = std::map<PredicateKey, std::vector<std::size_t>>;
PmaxTable pmax_table(const Program& p);

/// True iff a bijective renaming of variables maps `a` onto `b`.
bool is_variant(const Atom& a, const Atom& b);

}  // namespace lpterm

#endif  // LPTERM_PROGRAM_HPP
