#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qcir/dimension.hpp"
#include "qcir/element.hpp"

namespace qcir {

struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;

    // Spans are provenance, not structure; they never take part in equality.
    bool operator==(const SourceSpan &) const {
        return true;
    }
};

struct CellAddress {
    std::size_t row = 0;
    std::size_t col = 0;

    bool operator==(const CellAddress &other) const = default;
};

// One `&`-delimited entry of the matrix body. May be empty.
struct Cell {
    std::vector<Element> elements;
    SourceSpan source_span;

    bool operator==(const Cell &other) const = default;
    bool empty() const {
        return elements.empty();
    }
};

struct Spacing {
    Dim col_sep = Dim::em(1.0);
    Dim row_sep = Dim::em(1.0);
    Dim object_margin = Dim::em(0.05);
    // Equalize options @! / @!R / @!C: recorded, ignored by layout.
    bool equalize_all = false;
    bool equalize_rows = false;
    bool equalize_cols = false;

    bool operator==(const Spacing &other) const = default;
};

// Parsed circuit grid. Rows may be ragged; a missing trailing cell is an
// empty cell for addressing purposes.
struct CircuitAst {
    Spacing spacing;
    std::vector<std::vector<Cell>> rows;

    bool operator==(const CircuitAst &other) const = default;

    std::size_t row_count() const {
        return rows.size();
    }
    // Width of the logical (padded) grid.
    std::size_t col_count() const {
        std::size_t n = 0;
        for (const auto &row : rows) {
            n = row.size() > n ? row.size() : n;
        }
        return n;
    }
    bool cell_is_empty(std::size_t row, std::size_t col) const {
        if (row >= rows.size() || col >= rows[row].size()) {
            return true;
        }
        return rows[row][col].empty();
    }
    // Elements at (row, col); empty for padded cells.
    const std::vector<Element> *cell_elements(std::size_t row, std::size_t col) const {
        if (row >= rows.size() || col >= rows[row].size()) {
            return nullptr;
        }
        return &rows[row][col].elements;
    }
};

enum class Severity {
    Error,
    Warning,
};

// Error diagnostics prevent layout; warnings do not.
struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    std::string message;
    std::optional<CellAddress> cell;
    std::optional<SourceSpan> source_span;
};

inline bool has_errors(const std::vector<Diagnostic> &diagnostics) {
    for (const auto &d : diagnostics) {
        if (d.severity == Severity::Error) {
            return true;
        }
    }
    return false;
}

}  // namespace qcir
