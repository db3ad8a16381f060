#include "qcir/validate.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

namespace qcir {

namespace {

struct Checker {
    const CircuitAst &ast;
    std::size_t n_rows;
    std::size_t n_cols;
    std::vector<Diagnostic> diags;

    void add(Severity severity, std::string code, std::string message, CellAddress addr,
             SourceSpan span) {
        Diagnostic d;
        d.severity = severity;
        d.code = std::move(code);
        d.message = std::move(message);
        d.cell = addr;
        d.source_span = span;
        diags.push_back(std::move(d));
    }

    bool row_in_grid(long long row) const {
        return row >= 0 && row < static_cast<long long>(n_rows);
    }
    bool col_in_grid(long long col) const {
        return col >= 0 && col < static_cast<long long>(n_cols);
    }

    void check_row_target(const Element &e, CellAddress addr, SourceSpan span, int drow) {
        long long target = static_cast<long long>(addr.row) + drow;
        if (!row_in_grid(target)) {
            add(Severity::Error, "target-out-of-grid",
                "\\" + std::string(command_name(e.kind)) + " target row " +
                    std::to_string(target) + " out of grid",
                addr, span);
        }
    }

    void check_col_target(const Element &e, CellAddress addr, SourceSpan span, int dcol) {
        long long target = static_cast<long long>(addr.col) + dcol;
        if (!col_in_grid(target)) {
            add(Severity::Error, "target-out-of-grid",
                "\\" + std::string(command_name(e.kind)) + " target column " +
                    std::to_string(target) + " out of grid",
                addr, span);
        }
    }

    void check_element(const Element &e, CellAddress addr, SourceSpan span) {
        switch (e.kind) {
            case ElementKind::QWire:
            case ElementKind::CWire:
                check_col_target(e, addr, span, e.dcol);
                break;
            case ElementKind::QWireX:
            case ElementKind::CWireX:
            case ElementKind::Ctrl:
            case ElementKind::CtrlOpen:
                check_row_target(e, addr, span, e.drow);
                break;
            case ElementKind::Link: {
                long long trow = static_cast<long long>(addr.row) + e.drow;
                long long tcol = static_cast<long long>(addr.col) + e.dcol;
                if (!row_in_grid(trow) || !col_in_grid(tcol)) {
                    add(Severity::Error, "target-out-of-grid",
                        "\\link target (" + std::to_string(trow) + "," + std::to_string(tcol) +
                            ") out of grid",
                        addr, span);
                }
                break;
            }
            case ElementKind::MultiGate:
            case ElementKind::MultiMeasure:
            case ElementKind::MultiMeasureD: {
                // The span addresses the entry `span` rows down; it must
                // exist for layout to be safe.
                check_row_target(e, addr, span, e.span);
                check_span_coverage(e, addr, span);
                break;
            }
            case ElementKind::GateGroup: {
                bool inside = e.row1 >= 1 && e.col1 >= 1 &&
                              e.row2 <= static_cast<int>(n_rows) &&
                              e.col2 <= static_cast<int>(n_cols);
                bool ordered = e.row1 <= e.row2 && e.col1 <= e.col2;
                if (!inside || !ordered) {
                    add(Severity::Error, "gategroup-bounds",
                        "\\gategroup rectangle (" + std::to_string(e.row1) + "," +
                            std::to_string(e.col1) + ")-(" + std::to_string(e.row2) + "," +
                            std::to_string(e.col2) + ") does not fit the grid",
                        addr, span);
                }
                break;
            }
            default:
                break;
        }
    }

    void check_span_coverage(const Element &e, CellAddress addr, SourceSpan span) {
        for (int k = 1; k <= e.span; ++k) {
            long long row = static_cast<long long>(addr.row) + k;
            if (!row_in_grid(row)) {
                return;  // already reported as target-out-of-grid
            }
            bool covered = false;
            if (const auto *elements = ast.cell_elements(row, addr.col)) {
                for (const auto &other : *elements) {
                    if (other.kind == ElementKind::Ghost ||
                        other.kind == ElementKind::PureGhost) {
                        covered = true;
                        break;
                    }
                }
            }
            if (!covered) {
                CellAddress uncovered{static_cast<std::size_t>(row), addr.col};
                add(Severity::Warning, "multigate-span-uncovered",
                    "multigate span not covered by ghost", uncovered, span);
            }
        }
    }

    void run() {
        bool any_element = false;
        for (std::size_t r = 0; r < ast.rows.size(); ++r) {
            for (std::size_t c = 0; c < ast.rows[r].size(); ++c) {
                const Cell &cell = ast.rows[r][c];
                for (const auto &element : cell.elements) {
                    any_element = true;
                    check_element(element, CellAddress{r, c}, cell.source_span);
                }
            }
        }
        if (!any_element) {
            Diagnostic d;
            d.severity = Severity::Warning;
            d.code = "empty-circuit";
            d.message = "circuit body has no elements";
            diags.push_back(std::move(d));
        }
    }
};

}  // namespace

std::vector<Diagnostic> validate(const CircuitAst &ast) {
    Checker checker{ast, ast.row_count(), ast.col_count(), {}};
    checker.run();
    // Deterministic order: by diagnosed cell, grid-level entries last,
    // emission order as tiebreak.
    std::stable_sort(checker.diags.begin(), checker.diags.end(),
                     [](const Diagnostic &a, const Diagnostic &b) {
                         auto key = [](const Diagnostic &d) {
                             return d.cell ? std::pair<std::size_t, std::size_t>{d.cell->row,
                                                                                 d.cell->col}
                                           : std::pair<std::size_t, std::size_t>{SIZE_MAX,
                                                                                 SIZE_MAX};
                         };
                         return key(a) < key(b);
                     });
    return std::move(checker.diags);
}

}  // namespace qcir
