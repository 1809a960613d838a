#pragma once

#include <string>

#include "rasp/lang/ast.hpp"

namespace rasp::lang {

// Canonical source form. Printing is deterministic and reparses to a
// structurally identical AST (explicit parentheses are preserved as nodes).
std::string print(const Program& prog);
std::string print(const Expr& e);

// Deterministic JSON dump of the AST (node type, children, source span).
std::string ast_json(const Program& prog);

}  // namespace rasp::lang
