#pragma once

#include <string>

#include "qcir/scene.hpp"

namespace qcir {

// Standalone SVG 1.1 document. Coordinates map em -> px as
// (v - bounds_min + margin) * px_per_em; every number is printed with
// exactly three decimals so output is byte-deterministic.
std::string render_svg(const Scene &scene, const StyleConfig &style);

// Coarse character-grid picture on its own integer layout. One text line
// per circuit row plus one spacer line per row gap. Requires a validated
// ast.
std::string render_ascii(const CircuitAst &ast, const StyleConfig &style);

// Canonical structured text, one primitive per line, coordinates at four
// decimals; used for golden files.
std::string render_scene_text(const Scene &scene);

}  // namespace qcir
