#ifndef LPTERM_SYMBOL_STRING_HPP
#define LPTERM_SYMBOL_STRING_HPP

#include <string>
#include <vector>

#include "lpterm/term.hpp"

namespace lpterm {

/// One symbol of a symbol string; every variable becomes the same
/// anonymous token.
struct SymbolToken {
  std::string name;
  bool variable = false;

  static SymbolToken anonymous() { return {{}, true}; }
  friend bool operator==(const SymbolToken&, const SymbolToken&) = default;
};

/// Left-to-right reading of the symbols of a term or atom.
using SymbolString = std::vector<SymbolToken>;

SymbolString symbol_string(const Term& t);
/// The predicate symbol is the first token.
SymbolString symbol_string(const Atom& a);

std::string to_string(const SymbolString& s);

/// True iff `part` can be obtained from `whole` by deleting zero or more
/// tokens (subsequence test).
bool is_projection(const SymbolString& part, const SymbolString& whole);

/// `a` loops into `b`: same predicate and the symbol string of `a` is a
/// projection of that of `b`.
bool loops_into(const Atom& a, const Atom& b);

}  // namespace lpterm

#endif  // LPTERM_SYMBOL_STRING_HPP
