#pragma once

#include <vector>

#include "qcir/ast.hpp"

namespace qcir {

// Checks every relative target against the logical grid, gategroup
// rectangles, multigate span coverage, and emptiness. Returns all
// diagnostics sorted by (row, col, element index); grid-level diagnostics
// come last. An empty result (or warnings only) means the ast is
// layout-safe.
std::vector<Diagnostic> validate(const CircuitAst &ast);

}  // namespace qcir
