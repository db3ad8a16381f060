#include <algorithm>
#include <string>
#include <vector>

#include "qcir/render.hpp"

namespace qcir {

namespace {

std::u32string utf8_to_u32(std::string_view text) {
    std::u32string out;
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char lead = static_cast<unsigned char>(text[i]);
        std::size_t len = 1;
        char32_t cp = lead;
        if ((lead & 0xE0u) == 0xC0u) {
            len = 2;
            cp = lead & 0x1Fu;
        } else if ((lead & 0xF0u) == 0xE0u) {
            len = 3;
            cp = lead & 0x0Fu;
        } else if ((lead & 0xF8u) == 0xF0u) {
            len = 4;
            cp = lead & 0x07u;
        }
        if (i + len > text.size()) {
            len = 1;
            cp = lead;
        } else {
            for (std::size_t k = 1; k < len; ++k) {
                cp = (cp << 6) | (static_cast<unsigned char>(text[i + k]) & 0x3Fu);
            }
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string u32_to_utf8(const std::u32string &text) {
    std::string out;
    for (char32_t cp : text) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }
    return out;
}

std::u32string ascii_label(const LabelText &label) {
    std::string flat;
    for (const auto &run : label.runs) {
        switch (run.style) {
            case RunStyle::Superscript:
                flat += '^';
                break;
            case RunStyle::Subscript:
                flat += '_';
                break;
            default:
                break;
        }
        flat += run.text;
    }
    return utf8_to_u32(flat);
}

constexpr char32_t kWireQ = U'─';
constexpr char32_t kWireC = U'═';
constexpr char32_t kVertical = U'│';
constexpr char32_t kCrossing = U'┼';

struct AsciiCanvas {
    std::vector<std::u32string> lines;

    AsciiCanvas(std::size_t n_lines, std::size_t width)
        : lines(n_lines, std::u32string(width, U' ')) {}

    void put(std::size_t line, std::size_t col, char32_t ch) {
        if (line < lines.size() && col < lines[line].size()) {
            lines[line][col] = ch;
        }
    }
    char32_t get(std::size_t line, std::size_t col) const {
        if (line < lines.size() && col < lines[line].size()) {
            return lines[line][col];
        }
        return U' ';
    }
    void put_text(std::size_t line, std::size_t col, const std::u32string &text) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            put(line, col + i, text[i]);
        }
    }
};

struct AsciiRenderer {
    const CircuitAst &ast;
    std::size_t n_rows;
    std::size_t n_cols;

    std::vector<std::vector<std::u32string>> glyphs;  // [row][col]
    std::vector<std::u32string> left_text;
    std::vector<std::u32string> right_text;
    std::vector<std::size_t> col_width;
    std::vector<std::size_t> col_start;
    std::vector<std::size_t> col_center;
    std::size_t left_width = 0;
    std::size_t grid_end = 0;

    explicit AsciiRenderer(const CircuitAst &circuit)
        : ast(circuit), n_rows(circuit.row_count()), n_cols(circuit.col_count()) {}

    static std::size_t row_line(std::size_t row) {
        return 2 * row + 1;
    }

    std::u32string glyph_for(const Element &e) const {
        switch (e.kind) {
            case ElementKind::Gate:
            case ElementKind::Measure:
            case ElementKind::MeasureTab:
            case ElementKind::MeasureD:
                return U"[ " + ascii_label(e.label) + U" ]";
            case ElementKind::Meter:
                return U"[M]";
            case ElementKind::Push:
                return ascii_label(e.label);
            case ElementKind::Node:
                return U"(" + ascii_label(e.label) + U")";
            case ElementKind::ControlDot:
            case ElementKind::Ctrl:
                return U"●";
            case ElementKind::ControlDotOpen:
            case ElementKind::CtrlOpen:
                return U"○";
            case ElementKind::Targ:
                return U"⊕";
            case ElementKind::Swap:
                return U"╳";
            case ElementKind::MultiGate:
            case ElementKind::MultiMeasure:
            case ElementKind::MultiMeasureD:
                // Interior text plus one pad column per side.
                return U" " + ascii_label(e.label) + U" ";
            default:
                return {};
        }
    }

    void measure() {
        glyphs.assign(n_rows, std::vector<std::u32string>(n_cols));
        left_text.assign(n_rows, {});
        right_text.assign(n_rows, {});
        col_width.assign(n_cols, 0);

        for (std::size_t r = 0; r < n_rows; ++r) {
            for (std::size_t c = 0; c < ast.rows[r].size(); ++c) {
                for (const auto &e : ast.rows[r][c].elements) {
                    if (e.kind == ElementKind::LStick) {
                        if (!left_text[r].empty()) {
                            left_text[r] += U' ';
                        }
                        left_text[r] += ascii_label(e.label);
                        continue;
                    }
                    if (e.kind == ElementKind::RStick) {
                        if (!right_text[r].empty()) {
                            right_text[r] += U' ';
                        }
                        right_text[r] += ascii_label(e.label);
                        continue;
                    }
                    std::u32string g = glyph_for(e);
                    if (glyphs[r][c].empty() && !g.empty()) {
                        glyphs[r][c] = std::move(g);
                    }
                }
                col_width[c] = std::max(col_width[c], glyphs[r][c].size());
            }
        }

        for (const auto &text : left_text) {
            left_width = std::max(left_width, text.size());
        }
        if (left_width > 0) {
            left_width += 1;  // one space between label and wire
        }

        col_start.assign(n_cols, left_width);
        for (std::size_t c = 1; c < n_cols; ++c) {
            col_start[c] = col_start[c - 1] + col_width[c - 1] + 2;
        }
        col_center.assign(n_cols, 0);
        for (std::size_t c = 0; c < n_cols; ++c) {
            col_center[c] = col_width[c] > 0 ? col_start[c] + (col_width[c] - 1) / 2
                                             : (col_start[c] > 0 ? col_start[c] - 1 : 0);
        }
        grid_end = n_cols > 0 ? col_start[n_cols - 1] + col_width[n_cols - 1] : left_width;
    }

    bool cell_occupied(std::size_t r, std::size_t c) const {
        return !ast.cell_is_empty(r, c);
    }

    void draw_horizontal(AsciiCanvas &canvas, std::size_t line, std::size_t from, std::size_t to,
                         char32_t ch) const {
        for (std::size_t x = from; x <= to; ++x) {
            canvas.put(line, x, ch);
        }
    }

    void draw_vertical(AsciiCanvas &canvas, std::size_t col, std::size_t line_from,
                       std::size_t line_to) const {
        for (std::size_t y = line_from; y <= line_to; ++y) {
            char32_t current = canvas.get(y, col);
            canvas.put(y, col, current == kWireQ || current == kWireC ? kCrossing : kVertical);
        }
    }

    std::string run() {
        measure();

        bool any = false;
        for (std::size_t r = 0; r < n_rows && !any; ++r) {
            for (std::size_t c = 0; c < n_cols && !any; ++c) {
                any = cell_occupied(r, c);
            }
        }
        if (!any) {
            return "";
        }

        std::size_t max_right = 0;
        for (const auto &text : right_text) {
            max_right = std::max(max_right, text.size());
        }
        std::size_t width = grid_end + (max_right > 0 ? 1 + max_right : 0);
        AsciiCanvas canvas(2 * n_rows + 1, width);

        // Background wire across each row's occupied span.
        for (std::size_t r = 0; r < n_rows; ++r) {
            std::size_t first = n_cols;
            std::size_t last = n_cols;
            for (std::size_t c = 0; c < n_cols; ++c) {
                if (cell_occupied(r, c)) {
                    if (first == n_cols) {
                        first = c;
                    }
                    last = c;
                }
            }
            if (first == n_cols) {
                continue;
            }
            std::size_t from = col_start[first];
            std::size_t to = col_start[last] + col_width[last];
            if (to <= from) {
                continue;
            }
            draw_horizontal(canvas, row_line(r), from, to - 1, kWireQ);
        }

        // Explicit horizontal wires (classical ones restyle the run).
        for (std::size_t r = 0; r < n_rows; ++r) {
            for (std::size_t c = 0; c < n_cols && c < ast.rows[r].size(); ++c) {
                for (const auto &e : ast.rows[r][c].elements) {
                    int dcol = 0;
                    char32_t ch = kWireQ;
                    if (e.kind == ElementKind::QWire) {
                        dcol = e.dcol;
                    } else if (e.kind == ElementKind::CWire) {
                        dcol = e.dcol;
                        ch = kWireC;
                    } else if (e.kind == ElementKind::Link && e.drow == 0) {
                        dcol = e.dcol;
                    } else {
                        continue;
                    }
                    long long target = static_cast<long long>(c) + dcol;
                    if (dcol == 0 || target < 0 || target >= static_cast<long long>(n_cols)) {
                        continue;
                    }
                    std::size_t a = col_center[c];
                    std::size_t b = col_center[static_cast<std::size_t>(target)];
                    draw_horizontal(canvas, row_line(r), std::min(a, b), std::max(a, b), ch);
                }
            }
        }

        // Vertical wires and control drops.
        for (std::size_t r = 0; r < n_rows; ++r) {
            for (std::size_t c = 0; c < n_cols && c < ast.rows[r].size(); ++c) {
                for (const auto &e : ast.rows[r][c].elements) {
                    int drow = 0;
                    if (e.kind == ElementKind::QWireX || e.kind == ElementKind::CWireX ||
                        e.kind == ElementKind::Ctrl || e.kind == ElementKind::CtrlOpen) {
                        drow = e.drow;
                    } else if (e.kind == ElementKind::Link && e.dcol == 0) {
                        drow = e.drow;
                    } else {
                        continue;
                    }
                    long long target = static_cast<long long>(r) + drow;
                    if (drow == 0 || target < 0 || target >= static_cast<long long>(n_rows)) {
                        continue;
                    }
                    std::size_t top = row_line(std::min(r, static_cast<std::size_t>(target)));
                    std::size_t bottom = row_line(std::max(r, static_cast<std::size_t>(target)));
                    draw_vertical(canvas, col_center[c], top + 1, bottom - 1);
                }
            }
        }

        // Cell glyphs.
        for (std::size_t r = 0; r < n_rows; ++r) {
            for (std::size_t c = 0; c < n_cols; ++c) {
                const auto &g = glyphs[r][c];
                if (g.empty()) {
                    continue;
                }
                std::size_t at = col_start[c] + (col_width[c] - g.size()) / 2;
                canvas.put_text(row_line(r), at, g);
            }
        }

        // Multi-row boxes overdraw wires and glyph interiors.
        for (std::size_t r = 0; r < n_rows; ++r) {
            for (std::size_t c = 0; c < n_cols && c < ast.rows[r].size(); ++c) {
                for (const auto &e : ast.rows[r][c].elements) {
                    if (e.kind != ElementKind::MultiGate && e.kind != ElementKind::MultiMeasure &&
                        e.kind != ElementKind::MultiMeasureD) {
                        continue;
                    }
                    std::size_t bottom_row = r + static_cast<std::size_t>(e.span);
                    if (bottom_row >= n_rows) {
                        continue;
                    }
                    std::size_t x0 = col_start[c] > 0 ? col_start[c] - 1 : 0;
                    std::size_t x1 = col_start[c] + col_width[c];
                    std::size_t y0 = row_line(r) - 1;
                    std::size_t y1 = row_line(bottom_row) + 1;
                    for (std::size_t y = y0 + 1; y < y1; ++y) {
                        for (std::size_t x = x0 + 1; x < x1; ++x) {
                            canvas.put(y, x, U' ');
                        }
                        canvas.put(y, x0, kVertical);
                        canvas.put(y, x1, kVertical);
                    }
                    draw_horizontal(canvas, y0, x0 + 1, x1 - 1, kWireQ);
                    draw_horizontal(canvas, y1, x0 + 1, x1 - 1, kWireQ);
                    canvas.put(y0, x0, U'┌');
                    canvas.put(y0, x1, U'┐');
                    canvas.put(y1, x0, U'└');
                    canvas.put(y1, x1, U'┘');
                    std::u32string label = ascii_label(e.label);
                    if (!label.empty()) {
                        std::size_t mid = (y0 + y1) / 2;
                        std::size_t inner = x1 - x0 - 1;
                        std::size_t at = x0 + 1 + (inner > label.size() ? (inner - label.size()) / 2 : 0);
                        canvas.put_text(mid, at, label);
                    }
                }
            }
        }

        // Stick text.
        for (std::size_t r = 0; r < n_rows; ++r) {
            if (!left_text[r].empty()) {
                // Right-aligned against the wire start.
                std::size_t at = left_width - 1 - left_text[r].size();
                canvas.put_text(row_line(r), at, left_text[r]);
            }
            if (!right_text[r].empty()) {
                canvas.put_text(row_line(r), grid_end + 1, right_text[r]);
            }
            if (r < ast.rows.size()) {
                for (std::size_t c = 0; c < ast.rows[r].size(); ++c) {
                    for (const auto &e : ast.rows[r][c].elements) {
                        if (e.kind == ElementKind::UStick || e.kind == ElementKind::DStick) {
                            std::u32string text = ascii_label(e.label);
                            std::size_t line =
                                e.kind == ElementKind::UStick ? row_line(r) - 1 : row_line(r) + 1;
                            std::size_t center = col_center[c];
                            std::size_t at =
                                center >= text.size() / 2 ? center - text.size() / 2 : 0;
                            canvas.put_text(line, at, text);
                        }
                    }
                }
            }
        }

        // Trim trailing blanks and empty margin lines.
        std::vector<std::string> lines;
        for (auto &line : canvas.lines) {
            while (!line.empty() && line.back() == U' ') {
                line.pop_back();
            }
            lines.push_back(u32_to_utf8(line));
        }
        std::size_t begin = 0;
        std::size_t end = lines.size();
        while (begin < end && lines[begin].empty()) {
            ++begin;
        }
        while (end > begin && lines[end - 1].empty()) {
            --end;
        }
        std::string out;
        for (std::size_t i = begin; i < end; ++i) {
            out += lines[i];
            out += '\n';
        }
        return out;
    }
};

}  // namespace

std::string render_ascii(const CircuitAst &ast, const StyleConfig &) {
    AsciiRenderer renderer(ast);
    return renderer.run();
}

}  // namespace qcir
