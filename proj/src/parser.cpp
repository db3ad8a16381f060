#include "qcir/parser.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <string>

namespace qcir {

namespace {

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    return text;
}

struct Parser {
    ParseMode mode = ParseMode::Strict;
    std::vector<Diagnostic> diags;
    bool failed = false;

    void report(Severity severity, std::string code, std::string message, SourceSpan span,
                std::optional<CellAddress> cell = std::nullopt) {
        if (severity == Severity::Error) {
            failed = true;
        }
        Diagnostic d;
        d.severity = severity;
        d.code = std::move(code);
        d.message = std::move(message);
        d.cell = cell;
        d.source_span = span;
        diags.push_back(std::move(d));
    }

    void error(std::string code, std::string message, SourceSpan span,
               std::optional<CellAddress> cell = std::nullopt) {
        report(Severity::Error, std::move(code), std::move(message), span, cell);
    }

    void warning(std::string code, std::string message, SourceSpan span,
                 std::optional<CellAddress> cell = std::nullopt) {
        report(Severity::Warning, std::move(code), std::move(message), span, cell);
    }

    LabelText read_label(const Token &group, CellAddress addr) {
        std::string label_error;
        LabelText label = normalize_label(group.text, &label_error);
        if (!label_error.empty()) {
            error("bad-label", label_error, group.span, addr);
        }
        return label;
    }

    std::optional<int> read_int(const Token &token, CellAddress addr) {
        auto value = parse_integer(token.text);
        if (!value) {
            error("bad-integer", "expected a signed integer, got '" + token.text + "'",
                  token.span, addr);
        }
        return value;
    }

    // Consumes tokens[i..]; returns nullopt when the element had to be
    // skipped (the error is already recorded).
    std::optional<Element> parse_element(const std::vector<Token> &tokens, std::size_t &i,
                                         CellAddress addr) {
        const Token &cmd = tokens[i];
        const std::string &name = cmd.text;
        ++i;

        auto opt_int = [&](int fallback) -> std::optional<int> {
            if (i < tokens.size() && tokens[i].kind == TokenKind::OptArg) {
                auto value = read_int(tokens[i], addr);
                ++i;
                return value;
            }
            return fallback;
        };
        auto req_group = [&]() -> const Token * {
            if (i < tokens.size() && tokens[i].kind == TokenKind::Group) {
                return &tokens[i++];
            }
            if (i < tokens.size() && tokens[i].kind == TokenKind::OptArg) {
                error("unexpected-optarg",
                      "\\" + name + " does not take an optional argument here", tokens[i].span,
                      addr);
                ++i;
                return nullptr;
            }
            error("missing-argument", "\\" + name + " requires a braced argument", cmd.span,
                  addr);
            return nullptr;
        };
        auto req_label = [&]() -> std::optional<LabelText> {
            const Token *group = req_group();
            if (!group) {
                return std::nullopt;
            }
            return read_label(*group, addr);
        };
        auto req_int = [&]() -> std::optional<int> {
            const Token *group = req_group();
            if (!group) {
                return std::nullopt;
            }
            return read_int(*group, addr);
        };

        if (name == "qw" || name == "cw") {
            auto dcol = opt_int(-1);
            if (!dcol) {
                return std::nullopt;
            }
            return name == "qw" ? elem::qw(*dcol) : elem::cw(*dcol);
        }
        if (name == "qwx" || name == "cwx") {
            auto drow = opt_int(-1);
            if (!drow) {
                return std::nullopt;
            }
            return name == "qwx" ? elem::qwx(*drow) : elem::cwx(*drow);
        }
        if (name == "gate" || name == "measure" || name == "measuretab" || name == "measureD" ||
            name == "ghost" || name == "pureghost" || name == "push" || name == "lstick" ||
            name == "rstick" || name == "ustick" || name == "dstick") {
            auto label = req_label();
            if (!label) {
                return std::nullopt;
            }
            if (name == "gate") {
                return elem::gate(std::move(*label));
            }
            if (name == "measure") {
                return elem::measure(std::move(*label));
            }
            if (name == "measuretab") {
                return elem::measure_tab(std::move(*label));
            }
            if (name == "measureD") {
                return elem::measure_d(std::move(*label));
            }
            if (name == "ghost") {
                return elem::ghost(std::move(*label));
            }
            if (name == "pureghost") {
                return elem::pure_ghost(std::move(*label));
            }
            if (name == "push") {
                return elem::push(std::move(*label));
            }
            if (name == "lstick") {
                return elem::lstick(std::move(*label));
            }
            if (name == "rstick") {
                return elem::rstick(std::move(*label));
            }
            if (name == "ustick") {
                return elem::ustick(std::move(*label));
            }
            return elem::dstick(std::move(*label));
        }
        if (name == "meter") {
            return elem::meter();
        }
        if (name == "control") {
            return elem::control_dot();
        }
        if (name == "controlo") {
            return elem::control_dot_open();
        }
        if (name == "targ") {
            return elem::targ();
        }
        if (name == "qswap") {
            return elem::swap();
        }
        if (name == "ctrl" || name == "ctrlo") {
            auto drow = req_int();
            if (!drow) {
                return std::nullopt;
            }
            if (*drow == 0) {
                error("bad-offset", "\\" + name + " offset must be nonzero", cmd.span, addr);
                return std::nullopt;
            }
            return name == "ctrl" ? elem::ctrl(*drow) : elem::ctrl_open(*drow);
        }
        if (name == "multigate" || name == "multimeasure" || name == "multimeasureD") {
            auto span = req_int();
            if (!span) {
                return std::nullopt;
            }
            if (*span < 1) {
                error("bad-span",
                      "\\" + name + " span must be at least 1; use \\gate for a single row",
                      cmd.span, addr);
                return std::nullopt;
            }
            auto label = req_label();
            if (!label) {
                return std::nullopt;
            }
            if (name == "multigate") {
                return elem::multi_gate(*span, std::move(*label));
            }
            if (name == "multimeasure") {
                return elem::multi_measure(*span, std::move(*label));
            }
            return elem::multi_measure_d(*span, std::move(*label));
        }
        if (name == "gategroup") {
            int coords[4] = {0, 0, 0, 0};
            for (int k = 0; k < 4; ++k) {
                auto value = req_int();
                if (!value) {
                    return std::nullopt;
                }
                if (*value < 1) {
                    error("bad-coordinate", "\\gategroup coordinates are 1-based and must be >= 1",
                          cmd.span, addr);
                    return std::nullopt;
                }
                coords[k] = *value;
            }
            const Token *pad_group = req_group();
            if (!pad_group) {
                return std::nullopt;
            }
            auto pad = parse_dimension(pad_group->text);
            if (!pad) {
                error("bad-dimension", "expected a dimension, got '" + pad_group->text + "'",
                      pad_group->span, addr);
                return std::nullopt;
            }
            const Token *frame_group = req_group();
            if (!frame_group) {
                return std::nullopt;
            }
            auto frame = parse_frame_token(frame_group->text);
            if (!frame) {
                error("bad-frame-style", "unknown frame style '" + frame_group->text + "'",
                      frame_group->span, addr);
                return std::nullopt;
            }
            return elem::gate_group(coords[0], coords[1], coords[2], coords[3], *pad, *frame);
        }
        if (name == "node") {
            std::optional<LabelText> super;
            if (i < tokens.size() && tokens[i].kind == TokenKind::OptArg) {
                LabelText text = read_label(tokens[i], addr);
                ++i;
                if (!text.runs.empty()) {
                    super = std::move(text);
                }
            }
            auto label = req_label();
            if (!label) {
                return std::nullopt;
            }
            return elem::node(std::move(super), std::move(*label));
        }
        if (name == "link") {
            auto drow = req_int();
            if (!drow) {
                return std::nullopt;
            }
            auto dcol = req_int();
            if (!dcol) {
                return std::nullopt;
            }
            if (*drow == 0 && *dcol == 0) {
                error("bad-offset", "\\link offset must be nonzero", cmd.span, addr);
                return std::nullopt;
            }
            return elem::link(*drow, *dcol);
        }

        std::string message = "unknown command \\" + name;
        if (mode == ParseMode::Lenient) {
            warning("unknown-command", message + " (skipped)", cmd.span, addr);
        } else {
            error("unknown-command", message, cmd.span, addr);
        }
        return std::nullopt;
    }

    Cell parse_cell(const std::vector<Token> &tokens, SourceSpan span, CellAddress addr) {
        Cell cell;
        cell.source_span = span;
        std::size_t i = 0;
        while (i < tokens.size()) {
            const Token &t = tokens[i];
            if (t.kind == TokenKind::Command) {
                auto element = parse_element(tokens, i, addr);
                if (element) {
                    cell.elements.push_back(std::move(*element));
                }
                continue;
            }
            std::string message = "unexpected token in cell";
            if (t.kind == TokenKind::Group) {
                message = "stray braced group in cell";
            } else if (t.kind == TokenKind::Text) {
                message = "stray text '" + t.text + "' in cell";
            }
            if (mode == ParseMode::Lenient) {
                warning("unexpected-token", message + " (skipped)", t.span, addr);
            } else {
                error("unexpected-token", message, t.span, addr);
            }
            ++i;
        }

        // Macros for \ctrl, \ctrlo, \targ, \qswap and \ghost end in a
        // trailing \qw; attach it so layout is uniform.
        bool wants_trailing_wire = false;
        for (const auto &element : cell.elements) {
            switch (element.kind) {
                case ElementKind::Ctrl:
                case ElementKind::CtrlOpen:
                case ElementKind::Targ:
                case ElementKind::Swap:
                case ElementKind::Ghost:
                    wants_trailing_wire = true;
                    break;
                default:
                    break;
            }
        }
        if (wants_trailing_wire) {
            cell.elements.push_back(elem::qw(-1));
        }

        // Duplicate identical wires in one cell collapse to the first one.
        std::vector<Element> deduped;
        for (auto &element : cell.elements) {
            bool duplicate = false;
            if (element.is_wire()) {
                for (const auto &kept : deduped) {
                    if (kept == element) {
                        duplicate = true;
                        break;
                    }
                }
            }
            if (!duplicate) {
                deduped.push_back(std::move(element));
            }
        }
        cell.elements = std::move(deduped);
        return cell;
    }

    CircuitAst parse_body(const std::string &body, std::size_t body_offset, Spacing spacing) {
        CircuitAst ast;
        ast.spacing = spacing;

        TokenizeResult inner = tokenize(body, body_offset);
        if (!inner.ok()) {
            error("syntax", inner.error->message, SourceSpan{inner.error->offset, inner.error->offset});
            return ast;
        }

        std::vector<Cell> row_cells;
        std::vector<Token> cell_tokens;
        std::vector<std::vector<Cell>> rows;
        std::size_t cursor = body_offset;
        std::size_t row_idx = 0;

        auto flush_cell = [&]() {
            SourceSpan span = cell_tokens.empty()
                                  ? SourceSpan{cursor, cursor}
                                  : SourceSpan{cell_tokens.front().span.begin,
                                               cell_tokens.back().span.end};
            CellAddress addr{row_idx, row_cells.size()};
            Cell cell = parse_cell(cell_tokens, span, addr);
            row_cells.push_back(std::move(cell));
            cell_tokens.clear();
        };
        auto flush_row = [&]() {
            flush_cell();
            rows.push_back(std::move(row_cells));
            row_cells.clear();
            ++row_idx;
        };

        // Cells are delimited here; elements are parsed per cell so cell
        // addresses are known for diagnostics.
        for (const auto &token : inner.tokens) {
            if (token.kind == TokenKind::Ampersand) {
                flush_cell();
            } else if (token.kind == TokenKind::RowBreak) {
                flush_row();
            } else {
                cell_tokens.push_back(token);
            }
            cursor = token.span.end;
        }
        if (!cell_tokens.empty() || !row_cells.empty()) {
            flush_row();
        }
        if (rows.empty()) {
            // Empty body: a single empty cell keeps the grid non-degenerate.
            rows.push_back({Cell{{}, SourceSpan{body_offset, body_offset}}});
        }
        ast.rows = std::move(rows);
        return ast;
    }
};

}  // namespace

ParseResult parse(std::string_view source, ParseMode mode) {
    ParseResult result;
    Parser parser;
    parser.mode = mode;

    TokenizeResult outer = tokenize(source);
    if (!outer.ok()) {
        parser.error("syntax", outer.error->message,
                     SourceSpan{outer.error->offset, outer.error->offset});
        result.diagnostics = std::move(parser.diags);
        return result;
    }

    const std::vector<Token> &tokens = outer.tokens;
    std::size_t i = 0;
    if (i >= tokens.size() || tokens[i].kind != TokenKind::Command ||
        tokens[i].text != "Qcircuit") {
        SourceSpan span = i < tokens.size() ? tokens[i].span : SourceSpan{0, 0};
        parser.error("expected-qcircuit", "input must start with \\Qcircuit", span);
        result.diagnostics = std::move(parser.diags);
        return result;
    }
    ++i;

    Spacing spacing;
    if (i < tokens.size() && tokens[i].kind == TokenKind::OptArg) {
        auto margin = parse_dimension(tokens[i].text);
        if (margin) {
            spacing.object_margin = *margin;
        } else {
            parser.error("bad-dimension",
                         "expected a dimension, got '" + tokens[i].text + "'", tokens[i].span);
        }
        ++i;
    }
    while (i < tokens.size() && tokens[i].kind == TokenKind::SpacingOpt) {
        const Token &opt = tokens[i];
        if (opt.text == "C" || opt.text == "R" || opt.text == "*=") {
            auto dim = parse_dimension(opt.value);
            if (!dim) {
                parser.error("bad-dimension", "expected a dimension, got '" + opt.value + "'",
                             opt.span);
            } else if (opt.text == "C") {
                spacing.col_sep = *dim;
            } else if (opt.text == "R") {
                spacing.row_sep = *dim;
            } else {
                spacing.object_margin = *dim;
            }
        } else if (opt.text == "!" || opt.text == "!R" || opt.text == "!C") {
            if (opt.text == "!") {
                spacing.equalize_all = true;
            } else if (opt.text == "!R") {
                spacing.equalize_rows = true;
            } else {
                spacing.equalize_cols = true;
            }
            parser.warning("spacing-ignored",
                           "equalize spacing option '@" + opt.text + "' is recorded but ignored",
                           opt.span);
        } else {
            // @*[o] — round object shape, already the default.
        }
        ++i;
    }

    if (i >= tokens.size() || tokens[i].kind != TokenKind::Group) {
        SourceSpan span = i < tokens.size() ? tokens[i].span : SourceSpan{source.size(), source.size()};
        parser.error("expected-body", "expected '{' to open the circuit body", span);
        result.diagnostics = std::move(parser.diags);
        return result;
    }
    const Token &body = tokens[i];
    ++i;
    if (i < tokens.size()) {
        parser.error("trailing-input", "unexpected input after the circuit body", tokens[i].span);
    }

    CircuitAst ast = parser.parse_body(body.text, body.span.begin + 1, spacing);
    result.diagnostics = std::move(parser.diags);
    if (!parser.failed) {
        result.ast = std::move(ast);
    }
    return result;
}

std::optional<Dim> parse_dimension(std::string_view text) {
    std::string_view t = trim(text);
    if (t.size() < 3) {
        return std::nullopt;
    }
    std::string_view unit_text = t.substr(t.size() - 2);
    Unit unit;
    if (unit_text == "em") {
        unit = Unit::Em;
    } else if (unit_text == "ex") {
        unit = Unit::Ex;
    } else if (unit_text == "pt") {
        unit = Unit::Pt;
    } else {
        return std::nullopt;
    }
    std::string_view num = t.substr(0, t.size() - 2);
    std::size_t i = 0;
    if (i < num.size() && (num[i] == '+' || num[i] == '-')) {
        ++i;
    }
    std::size_t digits = 0;
    std::size_t dots = 0;
    for (; i < num.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(num[i]))) {
            ++digits;
        } else if (num[i] == '.') {
            ++dots;
        } else {
            return std::nullopt;
        }
    }
    if (digits == 0 || dots > 1) {
        return std::nullopt;
    }
    std::string buf(num);
    return Dim{std::strtod(buf.c_str(), nullptr), unit};
}

std::optional<int> parse_integer(std::string_view text) {
    std::string_view t = trim(text);
    if (t.empty()) {
        return std::nullopt;
    }
    std::size_t i = 0;
    if (t[0] == '+' || t[0] == '-') {
        ++i;
    }
    if (i >= t.size()) {
        return std::nullopt;
    }
    long long value = 0;
    for (; i < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
            return std::nullopt;
        }
        value = value * 10 + (t[i] - '0');
        if (value > std::numeric_limits<int>::max()) {
            return std::nullopt;
        }
    }
    if (t[0] == '-') {
        value = -value;
    }
    return static_cast<int>(value);
}

}  // namespace qcir
