#pragma once

#include <string>

#include "qcir/ast.hpp"

namespace qcir {

// Canonical pretty-printer: one row per line, cells joined by " & ", rows
// terminated by " \\", spacing options in the fixed order @C= @R=, the
// objectMargin optional argument only when non-default. parse(format(ast))
// is structurally equal to ast. Output is byte-deterministic with LF line
// endings.
std::string format(const CircuitAst &ast);

std::string format_element(const Element &element);

}  // namespace qcir
