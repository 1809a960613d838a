#pragma once

#include <vector>

#include "rasp/lang/ast.hpp"

namespace rasp::lang {

// Attention-cost measures of a program, computed on the dataflow of its entry
// function (calls inlined, variable references resolved to their defining
// expressions, parentheses ignored).
//
// A "head" is a distinct aggregate application, identified by the canonical
// form of its (selector, values) pair; textual repetition of the same pair
// counts once. A head's stratum is 1 + the deepest stratum among the heads
// its selector or values depend on.
struct ProgramMetrics {
    int depth = 0;           // number of sequential select-aggregate strata
    int width = 0;           // max distinct heads within one stratum
    int selector_count = 0;  // distinct attention patterns feeding aggregates
    std::vector<int> strata_widths;  // head count per stratum (index 0 = first)
};

ProgramMetrics metrics(const Program& prog);

}  // namespace rasp::lang
