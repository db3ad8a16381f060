#include "qcir/label.hpp"

#include <array>
#include <cctype>
#include <utility>

namespace qcir {

namespace {

constexpr std::array<std::pair<std::string_view, std::string_view>, 48> kGreek{{
    {"alpha", "α"},   {"beta", "β"},     {"gamma", "γ"},   {"delta", "δ"},
    {"epsilon", "ε"}, {"zeta", "ζ"},     {"eta", "η"},     {"theta", "θ"},
    {"iota", "ι"},    {"kappa", "κ"},    {"lambda", "λ"},  {"mu", "μ"},
    {"nu", "ν"},      {"xi", "ξ"},       {"omicron", "ο"}, {"pi", "π"},
    {"rho", "ρ"},     {"sigma", "σ"},    {"tau", "τ"},     {"upsilon", "υ"},
    {"phi", "φ"},     {"chi", "χ"},      {"psi", "ψ"},     {"omega", "ω"},
    {"Alpha", "Α"},   {"Beta", "Β"},     {"Gamma", "Γ"},   {"Delta", "Δ"},
    {"Epsilon", "Ε"}, {"Zeta", "Ζ"},     {"Eta", "Η"},     {"Theta", "Θ"},
    {"Iota", "Ι"},    {"Kappa", "Κ"},    {"Lambda", "Λ"},  {"Mu", "Μ"},
    {"Nu", "Ν"},      {"Xi", "Ξ"},       {"Omicron", "Ο"}, {"Pi", "Π"},
    {"Rho", "Ρ"},     {"Sigma", "Σ"},    {"Tau", "Τ"},     {"Upsilon", "Υ"},
    {"Phi", "Φ"},     {"Chi", "Χ"},      {"Psi", "Ψ"},     {"Omega", "Ω"},
}};

std::string_view greek_letter(std::string_view name) {
    for (const auto &[key, value] : kGreek) {
        if (key == name) {
            return value;
        }
    }
    return {};
}

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::size_t utf8_char_len(unsigned char lead) {
    if ((lead & 0x80u) == 0x00u) {
        return 1;
    }
    if ((lead & 0xE0u) == 0xC0u) {
        return 2;
    }
    if ((lead & 0xF0u) == 0xE0u) {
        return 3;
    }
    if ((lead & 0xF8u) == 0xF0u) {
        return 4;
    }
    return 1;
}

constexpr int kMaxNesting = 64;

struct Normalizer {
    std::string_view src;
    std::string *error = nullptr;
    std::vector<StyledRun> runs;
    int depth = 0;

    void fail(const std::string &message) {
        if (error && error->empty()) {
            *error = message;
        }
    }

    void emit(std::string_view text, RunStyle style) {
        if (text.empty()) {
            return;
        }
        if (!runs.empty() && runs.back().style == style) {
            runs.back().text.append(text);
        } else {
            runs.push_back(StyledRun{std::string(text), style});
        }
    }

    // Body of a balanced group starting at `i` (src[i] == '{').
    // Returns the body range and advances past the closing brace.
    std::string_view read_group(std::size_t &i) {
        std::size_t depth = 0;
        std::size_t start = i + 1;
        std::size_t j = i;
        while (j < src.size()) {
            char c = src[j];
            if (c == '\\' && j + 1 < src.size()) {
                j += 2;
                continue;
            }
            if (c == '{') {
                ++depth;
            } else if (c == '}') {
                --depth;
                if (depth == 0) {
                    std::string_view body = src.substr(start, j - start);
                    i = j + 1;
                    return body;
                }
            }
            ++j;
        }
        fail("unbalanced brace in label");
        std::string_view body = src.substr(start);
        i = src.size();
        return body;
    }

    std::string_view read_control_word(std::size_t &i) {
        // src[i] == '\\'; returns the name (letters, or one symbol char).
        std::size_t j = i + 1;
        if (j >= src.size()) {
            fail("trailing backslash in label");
            i = src.size();
            return {};
        }
        if (std::isalpha(static_cast<unsigned char>(src[j]))) {
            std::size_t start = j;
            while (j < src.size() && std::isalpha(static_cast<unsigned char>(src[j]))) {
                ++j;
            }
            i = j;
            return src.substr(start, j - start);
        }
        std::size_t len = utf8_char_len(static_cast<unsigned char>(src[j]));
        std::string_view name = src.substr(j, len);
        i = j + len;
        return name;
    }

    void expand_control(std::string_view name, RunStyle style, std::size_t &i) {
        if (name == "ket" || name == "bra") {
            emit(name == "ket" ? "|" : "⟨", style);
            process_argument(style, i);
            emit(name == "ket" ? "⟩" : "|", style);
            return;
        }
        if (name == "dagger" || name == "dag") {
            emit("†", style);
            return;
        }
        if (auto letter = greek_letter(name); !letter.empty()) {
            emit(letter, style);
            return;
        }
        if (name == ";" || name == "," || name == " ") {
            emit(" ", style);
            return;
        }
        // Unknown control word: rendered literally without the backslash.
        emit(name, style);
    }

    // One argument: a group, a control word, or a single code point.
    void process_argument(RunStyle style, std::size_t &i) {
        while (i < src.size() && is_space(src[i])) {
            ++i;
        }
        if (i >= src.size()) {
            return;
        }
        if (src[i] == '{') {
            std::string_view body = read_group(i);
            process(body, style);
            return;
        }
        if (src[i] == '\\') {
            std::string_view name = read_control_word(i);
            expand_control(name, style, i);
            return;
        }
        std::size_t len = utf8_char_len(static_cast<unsigned char>(src[i]));
        emit(src.substr(i, len), style);
        i += len;
    }

    void process(std::string_view text, RunStyle style) {
        if (depth >= kMaxNesting) {
            fail("label nesting too deep");
            return;
        }
        ++depth;
        std::string_view outer = std::exchange(src, text);
        std::size_t i = 0;
        while (i < src.size()) {
            char c = src[i];
            if (c == '$') {
                ++i;
            } else if (c == '{') {
                std::string_view body = read_group(i);
                process(body, style);
            } else if (c == '}') {
                fail("unbalanced brace in label");
                ++i;
            } else if (c == '^' || c == '_') {
                RunStyle sub = c == '^' ? RunStyle::Superscript : RunStyle::Subscript;
                ++i;
                std::size_t before = runs.size();
                process_argument(sub, i);
                // Force the whole argument into the script style.
                for (std::size_t r = before; r < runs.size(); ++r) {
                    runs[r].style = sub;
                }
                // Re-merge runs that now share a style.
                std::vector<StyledRun> merged;
                for (auto &run : runs) {
                    if (!merged.empty() && merged.back().style == run.style) {
                        merged.back().text.append(run.text);
                    } else {
                        merged.push_back(std::move(run));
                    }
                }
                runs = std::move(merged);
            } else if (c == '\\') {
                std::string_view name = read_control_word(i);
                expand_control(name, style, i);
            } else if (is_space(c)) {
                while (i < src.size() && is_space(src[i])) {
                    ++i;
                }
                emit(" ", style);
            } else {
                std::size_t len = utf8_char_len(static_cast<unsigned char>(c));
                emit(src.substr(i, len), style);
                i += len;
            }
        }
        src = outer;
        --depth;
    }
};

void collapse_spaces(std::string &text) {
    std::string out;
    out.reserve(text.size());
    bool prev_space = false;
    for (char c : text) {
        bool space = is_space(c);
        if (space && prev_space) {
            continue;
        }
        out.push_back(space ? ' ' : c);
        prev_space = space;
    }
    text = std::move(out);
}

}  // namespace

LabelText normalize_label(std::string_view raw, std::string *error) {
    if (error) {
        error->clear();
    }
    Normalizer norm;
    norm.error = error;
    norm.process(raw, RunStyle::Normal);

    LabelText label;
    label.raw.assign(raw);
    for (auto &run : norm.runs) {
        collapse_spaces(run.text);
        if (run.text.empty()) {
            continue;
        }
        if (!label.runs.empty() && label.runs.back().style == run.style) {
            label.runs.back().text.append(run.text);
        } else {
            label.runs.push_back(std::move(run));
        }
    }
    return label;
}

namespace {

// Escapes characters the normalizer treats specially so that re-normalizing
// the rendered text reproduces the same runs.
std::string escape_plain(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '{':
            case '}':
            case '^':
            case '_':
            case '$':
            case '\\':
                out.push_back('\\');
                break;
            default:
                break;
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string render_plain(const LabelText &label) {
    std::string out;
    for (const auto &run : label.runs) {
        std::string text = escape_plain(run.text);
        switch (run.style) {
            case RunStyle::Normal:
            case RunStyle::Small:
                out += text;
                break;
            case RunStyle::Superscript:
                out += "^{" + text + "}";
                break;
            case RunStyle::Subscript:
                out += "_{" + text + "}";
                break;
        }
    }
    return out;
}

std::size_t utf8_length(std::string_view text) {
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        i += utf8_char_len(static_cast<unsigned char>(text[i]));
        ++count;
    }
    return count;
}

}  // namespace qcir
