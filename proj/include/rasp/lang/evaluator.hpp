#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "rasp/lang/ast.hpp"

namespace rasp::lang {

// A RASP expression evaluates to an equal-length token sequence or to an
// n x n selector.
using Value = std::variant<Sequence, Selector>;

struct EvalOptions {
    // Free parameters (e.g. r, c, H) resolvable at instantiation; identifiers
    // not assigned in-program and not builtins are looked up here.
    std::map<std::string, double> bindings;
};

// Evaluates the program's entry function (the last definition, which must be
// parameterless) on `input`. Deterministic; output length == input length.
Sequence evaluate(const Program& prog, const Sequence& input,
                  const EvalOptions& opts = {});

// Evaluates a named function with explicit argument values (used for
// definitions that take sequence parameters, such as Det(Cofactor)).
Sequence evaluate_function(const Program& prog, const std::string& fn,
                           const Sequence& input, const std::vector<Value>& args,
                           const EvalOptions& opts = {});

}  // namespace rasp::lang
