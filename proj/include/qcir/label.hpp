#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qcir {

enum class RunStyle {
    Normal,
    Superscript,
    Subscript,
    Small,
};

struct StyledRun {
    std::string text;
    RunStyle style = RunStyle::Normal;

    bool operator==(const StyledRun &other) const = default;
};

// A label after normalization of the label mini-language. `raw` keeps the
// verbatim source between the braces; `runs` is the styled rendering of it.
struct LabelText {
    std::string raw;
    std::vector<StyledRun> runs;

    bool operator==(const LabelText &other) const = default;
    bool empty() const {
        return runs.empty();
    }
};

// Rewrites the label mini-language into styled runs:
//   \ket{x} -> |x>, \bra{x} -> <x|, $...$ stripped, ^{...}/_{...} and
//   single-token ^x/_x -> superscript/subscript, \dagger/\dag -> dagger,
//   Greek control words -> letters, \; \, "\ " -> space, unknown control
//   words rendered literally without the backslash.
// Unbalanced braces set *error (when non-null) and yield a best-effort
// result. The rewrite is deterministic and idempotent on its plain-text
// rendering.
LabelText normalize_label(std::string_view raw, std::string *error = nullptr);

// Inverse of normalization: emits run text with ^{...}/_{...} markers so
// that normalize_label(render_plain(label)) reproduces the same runs.
std::string render_plain(const LabelText &label);

// Number of Unicode code points in a UTF-8 string. Invalid bytes count one.
std::size_t utf8_length(std::string_view text);

}  // namespace qcir
