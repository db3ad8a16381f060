#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qcir/ast.hpp"
#include "qcir/tokenizer.hpp"

namespace qcir {

enum class ParseMode {
    Strict,   // unknown command is an error
    Lenient,  // unknown command is a warning, the command is skipped
};

struct ParseResult {
    std::optional<CircuitAst> ast;  // set only when no error occurred
    std::vector<Diagnostic> diagnostics;

    bool ok() const {
        return ast.has_value();
    }
};

// Accepts `\Qcircuit <spacing-opts> { <rows> }`. Rows are separated by \\,
// cells by &; a trailing \\ produces no extra row. Elements whose macros
// end in a trailing wire (\ctrl, \ctrlo, \targ, \qswap, \ghost) get an
// implicit QWire{-1} appended to the cell; duplicate identical wires in one
// cell are deduplicated.
ParseResult parse(std::string_view source, ParseMode mode = ParseMode::Strict);

// "1em", ".7em", "-0.5ex" and the like. Null on malformed input.
std::optional<Dim> parse_dimension(std::string_view text);

// Optional-signed decimal integer with surrounding whitespace allowed.
std::optional<int> parse_integer(std::string_view text);

}  // namespace qcir
