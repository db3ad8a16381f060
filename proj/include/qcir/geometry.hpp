#pragma once

#include <vector>

#include "qcir/ast.hpp"
#include "qcir/style.hpp"

namespace qcir {

// Width/height of an object in em; zero-size objects do not widen the grid.
struct Extent {
    double width = 0.0;
    double height = 0.0;
};

// Per-row/per-column anchor coordinates and extents in em. y grows downward.
struct GridGeometry {
    std::vector<double> col_x;       // anchor x per column, strictly increasing
    std::vector<double> row_y;       // anchor y per row, strictly increasing
    std::vector<double> col_width;
    std::vector<double> row_height;

    double anchor_x(std::size_t col) const {
        return col_x[col];
    }
    double anchor_y(std::size_t row) const {
        return row_y[row];
    }
};

// Width of a label in em per the fixed metrics table.
double label_width(const LabelText &label, const StyleConfig &style);

Extent measure_element(const Element &element, const StyleConfig &style);

// Largest element extent in the cell (empty cells measure zero).
Extent measure_cell(const Cell &cell, const StyleConfig &style);

// Anchor recurrence: col_x[0] = w0/2, col_x[c] = col_x[c-1] + w(c-1)/2 +
// colSep + w(c)/2; rows likewise with a min_row_height floor. Requires a
// validated ast (no error diagnostics).
GridGeometry grid_geometry(const CircuitAst &ast, const StyleConfig &style);

}  // namespace qcir
