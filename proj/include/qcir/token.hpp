#pragma once

#include <string>

#include "qcir/ast.hpp"

namespace qcir {

enum class TokenKind {
    Command,     // \name ; text = name without backslash
    Group,       // {...} ; text = body without braces
    OptArg,      // [...] immediately after a Command; text = body
    Ampersand,   // &
    RowBreak,    // the double-backslash row separator
    SpacingOpt,  // @C=<dim>, @R=<dim>, @!, @!R, @!C, @*=<dim>, @*[o]
    Text,        // any other non-space run
};

struct Token {
    TokenKind kind = TokenKind::Text;
    std::string text;   // payload, see TokenKind
    std::string value;  // SpacingOpt value; empty otherwise
    SourceSpan span;
};

}  // namespace qcir
