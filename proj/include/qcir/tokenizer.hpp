#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcir/token.hpp"

namespace qcir {

struct TokenizeError {
    std::string message;
    std::size_t offset = 0;
};

struct TokenizeResult {
    std::vector<Token> tokens;
    std::optional<TokenizeError> error;

    bool ok() const {
        return !error.has_value();
    }
};

// Scans TeX-like surface syntax. `%` comments count as whitespace. Group
// and OptArg bodies are kept verbatim (escapes like \{ and \} do not count
// toward brace depth). `base_offset` shifts spans so nested tokenizations
// of group bodies report absolute positions.
TokenizeResult tokenize(std::string_view source, std::size_t base_offset = 0);

}  // namespace qcir
