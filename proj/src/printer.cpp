#include "qcir/printer.hpp"

#include <string>

namespace qcir {

namespace {

void append_label(std::string &out, const LabelText &label) {
    out += '{';
    out += label.raw;
    out += '}';
}

void append_int_group(std::string &out, int value) {
    out += '{';
    out += std::to_string(value);
    out += '}';
}

}  // namespace

std::string format_element(const Element &e) {
    std::string out = "\\";
    out += command_name(e.kind);
    switch (e.kind) {
        case ElementKind::QWire:
        case ElementKind::CWire:
            if (e.dcol != -1) {
                out += '[' + std::to_string(e.dcol) + ']';
            }
            break;
        case ElementKind::QWireX:
        case ElementKind::CWireX:
            if (e.drow != -1) {
                out += '[' + std::to_string(e.drow) + ']';
            }
            break;
        case ElementKind::Gate:
        case ElementKind::Measure:
        case ElementKind::MeasureTab:
        case ElementKind::MeasureD:
        case ElementKind::Ghost:
        case ElementKind::PureGhost:
        case ElementKind::Push:
        case ElementKind::LStick:
        case ElementKind::RStick:
        case ElementKind::UStick:
        case ElementKind::DStick:
            append_label(out, e.label);
            break;
        case ElementKind::MultiGate:
        case ElementKind::MultiMeasure:
        case ElementKind::MultiMeasureD:
            append_int_group(out, e.span);
            append_label(out, e.label);
            break;
        case ElementKind::Ctrl:
        case ElementKind::CtrlOpen:
            append_int_group(out, e.drow);
            break;
        case ElementKind::Link:
            append_int_group(out, e.drow);
            append_int_group(out, e.dcol);
            break;
        case ElementKind::GateGroup:
            append_int_group(out, e.row1);
            append_int_group(out, e.col1);
            append_int_group(out, e.row2);
            append_int_group(out, e.col2);
            out += '{' + dim_to_string(e.pad) + '}';
            out += '{';
            out += frame_token(e.frame);
            out += '}';
            break;
        case ElementKind::Node:
            if (e.super) {
                out += '[';
                out += e.super->raw;
                out += ']';
            }
            append_label(out, e.label);
            break;
        case ElementKind::Meter:
        case ElementKind::ControlDot:
        case ElementKind::ControlDotOpen:
        case ElementKind::Targ:
        case ElementKind::Swap:
            break;
    }
    return out;
}

std::string format(const CircuitAst &ast) {
    std::string out = "\\Qcircuit";
    if (!(ast.spacing.object_margin == Dim::em(0.05))) {
        out += '[' + dim_to_string(ast.spacing.object_margin) + ']';
    }
    out += " @C=" + dim_to_string(ast.spacing.col_sep);
    out += " @R=" + dim_to_string(ast.spacing.row_sep);
    if (ast.spacing.equalize_all) {
        out += " @!";
    }
    if (ast.spacing.equalize_rows) {
        out += " @!R";
    }
    if (ast.spacing.equalize_cols) {
        out += " @!C";
    }
    out += " {\n";
    for (const auto &row : ast.rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) {
                line += " & ";
            }
            const Cell &cell = row[c];
            for (std::size_t k = 0; k < cell.elements.size(); ++k) {
                if (k > 0) {
                    line += ' ';
                }
                line += format_element(cell.elements[k]);
            }
        }
        out += line;
        out += " \\\\\n";
    }
    out += '}';
    return out;
}

}  // namespace qcir
