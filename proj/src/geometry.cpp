#include "qcir/geometry.hpp"

namespace qcir {

double label_width(const LabelText &label, const StyleConfig &style) {
    double width = 0.0;
    for (const auto &run : label.runs) {
        double per_char =
            run.style == RunStyle::Normal ? style.char_width : style.small_char_width;
        width += per_char * static_cast<double>(utf8_length(run.text));
    }
    return width;
}

Extent measure_element(const Element &e, const StyleConfig &style) {
    const double lw = label_width(e.label, style);
    const double lh = style.line_height;
    switch (e.kind) {
        case ElementKind::Gate:
            return {lw + 2 * style.gate_pad, lh + 2 * style.gate_pad};
        case ElementKind::Meter:
            return {2 * style.meter_radius, style.meter_radius};
        case ElementKind::Measure:
        case ElementKind::MeasureTab:
        case ElementKind::MeasureD:
            return {lw + 2 * style.measure_pad, lh + 2 * style.measure_pad};
        case ElementKind::MultiGate:
        case ElementKind::MultiMeasure:
        case ElementKind::MultiMeasureD:
        case ElementKind::Ghost:
        case ElementKind::PureGhost:
            return {lw + 2 * style.multi_pad_x, lh + 2 * style.multi_pad_y};
        case ElementKind::Push:
            return {lw, lh};
        case ElementKind::ControlDot:
            return {2 * style.ctrl_radius, 2 * style.ctrl_radius};
        case ElementKind::Ctrl:
            return {2 * style.ctrl_radius, 2 * style.ctrl_radius};
        case ElementKind::ControlDotOpen:
        case ElementKind::CtrlOpen:
            return {2 * style.open_dot_radius, 2 * style.open_dot_radius};
        case ElementKind::Targ: {
            double d = 2 * (style.targ_radius + style.targ_frame);
            return {d, d};
        }
        case ElementKind::Node: {
            return {lw + 2 * style.node_pad, lh + 2 * style.node_pad};
        }
        case ElementKind::QWire:
        case ElementKind::QWireX:
        case ElementKind::CWire:
        case ElementKind::CWireX:
        case ElementKind::Swap:
        case ElementKind::GateGroup:
        case ElementKind::LStick:
        case ElementKind::RStick:
        case ElementKind::UStick:
        case ElementKind::DStick:
        case ElementKind::Link:
            return {0.0, 0.0};
    }
    return {0.0, 0.0};
}

Extent measure_cell(const Cell &cell, const StyleConfig &style) {
    Extent extent;
    for (const auto &element : cell.elements) {
        Extent e = measure_element(element, style);
        if (e.width > extent.width) {
            extent.width = e.width;
        }
        if (e.height > extent.height) {
            extent.height = e.height;
        }
    }
    return extent;
}

GridGeometry grid_geometry(const CircuitAst &ast, const StyleConfig &style) {
    const std::size_t n_rows = ast.row_count();
    const std::size_t n_cols = ast.col_count();
    GridGeometry grid;
    grid.col_width.assign(n_cols, 0.0);
    grid.row_height.assign(n_rows, style.min_row_height);

    for (std::size_t r = 0; r < n_rows; ++r) {
        for (std::size_t c = 0; c < ast.rows[r].size(); ++c) {
            Extent extent = measure_cell(ast.rows[r][c], style);
            if (extent.width > grid.col_width[c]) {
                grid.col_width[c] = extent.width;
            }
            if (extent.height > grid.row_height[r]) {
                grid.row_height[r] = extent.height;
            }
        }
    }

    const double col_sep = ast.spacing.col_sep.to_em();
    const double row_sep = ast.spacing.row_sep.to_em();
    grid.col_x.resize(n_cols);
    grid.row_y.resize(n_rows);
    for (std::size_t c = 0; c < n_cols; ++c) {
        grid.col_x[c] = c == 0 ? grid.col_width[0] / 2
                               : grid.col_x[c - 1] + grid.col_width[c - 1] / 2 + col_sep +
                                     grid.col_width[c] / 2;
    }
    for (std::size_t r = 0; r < n_rows; ++r) {
        grid.row_y[r] = r == 0 ? grid.row_height[0] / 2
                               : grid.row_y[r - 1] + grid.row_height[r - 1] / 2 + row_sep +
                                     grid.row_height[r] / 2;
    }
    return grid;
}

}  // namespace qcir
