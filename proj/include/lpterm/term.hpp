#ifndef LPTERM_TERM_HPP
#define LPTERM_TERM_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lpterm {

/// Reserved functor used for list cells; `[H|T]` is `'[|]'(H, T)`.
inline constexpr std::string_view kListFunctor = "[|]";
/// The empty list, an ordinary constant.
inline constexpr std::string_view kEmptyList = "[]";

/// Stable variable identifier. Unique within one analysis run.
struct VarId {
  std::uint64_t value = 0;
  auto operator<=>(const VarId&) const = default;
};

/// Immutable first-order term with shared structure.
///
/// Size, nesting depth and groundness are computed once at construction,
/// so queries on them are O(1).
class Term {
 public:
  enum class Kind : std::uint8_t { Variable, Constant, Compound };

  static Term variable(VarId id, std::string name);
  static Term constant(std::string name);
  /// Throws std::invalid_argument when `args` is empty (arity must be >= 1).
  static Term compound(std::string functor, std::vector<Term> args);
  /// Builds `[i1, ..., in | tail]`; tail defaults to `[]`.
  static Term list(const std::vector<Term>& items,
                   std::optional<Term> tail = std::nullopt);

  Kind kind() const { return rep_->kind; }
  bool is_variable() const { return kind() == Kind::Variable; }
  bool is_constant() const { return kind() == Kind::Constant; }
  bool is_compound() const { return kind() == Kind::Compound; }

  /// Variable id; only meaningful for variables.
  VarId var_id() const { return rep_->id; }
  /// Variable name, constant name, or functor.
  const std::string& name() const { return rep_->name; }
  std::span<const Term> args() const { return rep_->args; }
  std::size_t arity() const { return rep_->args.size(); }

  /// Occurrences of function symbols, constants and variables.
  std::size_t size() const { return rep_->size; }
  /// Layers of nested functions; variables and constants have depth 0.
  std::size_t depth() const { return rep_->depth; }
  bool ground() const { return rep_->ground; }

  /// Structural equality; variables compare by id only.
  friend bool operator==(const Term& a, const Term& b);

  bool same_node(const Term& other) const { return rep_ == other.rep_; }

 private:
  struct Rep {
    Kind kind;
    VarId id;
    std::string name;
    std::vector<Term> args;
    std::size_t size = 1;
    std::size_t depth = 0;
    bool ground = true;
  };
  explicit Term(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

/// Total order used for deterministic containers (not semantically meaningful).
std::strong_ordering compare_terms(const Term& a, const Term& b);

struct PredicateKey {
  std::string name;
  std::size_t arity = 0;
  auto operator<=>(const PredicateKey&) const = default;
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  std::size_t arity() const { return args.size(); }
  PredicateKey key() const { return {predicate, args.size()}; }
  friend bool operator==(const Atom&, const Atom&) = default;
};

struct Literal {
  bool negative = false;
  Atom atom;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Clause {
  Atom head;
  std::vector<Literal> body;
  /// Position in program text, 0-based.
  std::size_t index = 0;

  bool is_fact() const { return body.empty(); }
};

/// Number of function symbols, constants and variables. The predicate symbol
/// of an atom is not counted.
std::size_t term_size(const Term& t);
std::size_t term_size(const Atom& a);
std::size_t nesting_depth(const Term& t);

/// Appends every variable of `t` (left to right, with repeats) to `out`.
void collect_variables(const Term& t, std::vector<VarId>& out);
void collect_variables(const Atom& a, std::vector<VarId>& out);
bool occurs_in(VarId v, const Term& t);

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Literal& l);
std::string to_string(const Clause& c);
std::string to_string(std::span<const Literal> goal);

std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Atom& a);

}  // namespace lpterm

#endif  // LPTERM_TERM_HPP
