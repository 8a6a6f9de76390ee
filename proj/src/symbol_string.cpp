#include "lpterm/symbol_string.hpp"

#include <sstream>

namespace lpterm {

namespace {

void read(const Term& t, SymbolString& out) {
  if (t.is_variable()) {
    out.push_back(SymbolToken::anonymous());
    return;
  }
  out.push_back({t.name(), false});
  for (const Term& a : t.args()) read(a, out);
}

}  // namespace

SymbolString symbol_string(const Term& t) {
  SymbolString out;
  out.reserve(t.size());
  read(t, out);
  return out;
}

SymbolString symbol_string(const Atom& a) {
  SymbolString out;
  out.reserve(term_size(a) + 1);
  out.push_back({a.predicate, false});
  for (const Term& t : a.args) read(t, out);
  return out;
}

std::string to_string(const SymbolString& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ' ';
    os << (s[i].variable ? "X" : s[i].name);
  }
  return os.str();
}

bool is_projection(const SymbolString& part, const SymbolString& whole) {
  if (part.size() > whole.size()) return false;
  std::size_t i = 0;
  for (std::size_t j = 0; j < whole.size() && i < part.size(); ++j) {
    if (part[i] == whole[j]) ++i;
  }
  return i == part.size();
}

bool loops_into(const Atom& a, const Atom& b) {
  if (a.key() != b.key()) return false;
  if (term_size(a) > term_size(b)) return false;
  return is_projection(symbol_string(a), symbol_string(b));
}

}  // namespace lpterm
