#ifndef LPTERM_DOT_HPP
#define LPTERM_DOT_HPP

#include <string>

#include "lpterm/engine.hpp"
#include "lpterm/program.hpp"

namespace lpterm {

/// Graphviz rendering of a retained tree. Resolution edges are solid and
/// labeled with clause names, negation arcs are dashed, and nodes list the
/// clauses cut by the loop check or left untried.
std::string export_dot(const TreeResult& tree, const Program& p);

}  // namespace lpterm

#endif  // LPTERM_DOT_HPP
