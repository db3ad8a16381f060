#include "qcir/scene.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace qcir {

namespace {

// Geometry constants lifted from the macro bodies, not style-tunable.
constexpr double kMeasureTabDepthEm = 0.5;   // tab apex offset left of the box
constexpr double kMeterNeedleInsetEm = 0.4;  // needle start below the arc top
constexpr double kMeterNeedleDxEm = 0.5;     // needle run
constexpr double kMeterNeedleDyEm = 0.9;     // needle rise

struct Planner {
    const CircuitAst &ast;
    const GridGeometry &grid;
    const StyleConfig &style;

    std::array<std::vector<Primitive>, 5> layers;
    std::vector<LinePrim> cell_lines;  // lines emitted by the current cell

    Point anchor(std::size_t row, std::size_t col) const {
        return Point{grid.col_x[col], grid.row_y[row]};
    }

    void add(int layer, Primitive primitive) {
        layers[static_cast<std::size_t>(layer)].push_back(std::move(primitive));
    }

    void add_line(Point p1, Point p2, LineStyle line_style, int layer) {
        if (p1 == p2) {
            return;  // zero-length wires emit nothing
        }
        for (const auto &seen : cell_lines) {
            if (seen.p1 == p1 && seen.p2 == p2 && seen.style == line_style) {
                return;  // one cell never emits the same line twice
            }
        }
        cell_lines.push_back(LinePrim{p1, p2, line_style});
        add(layer, LinePrim{p1, p2, line_style});
    }

    void add_text(Point at, TextAlign align, const LabelText &label, double size, int layer) {
        if (label.runs.empty()) {
            return;
        }
        TextRunPrim text;
        text.anchor = at;
        text.align = align;
        text.runs = label;
        text.size = size;
        text.width = label_width(label, style) * size;
        text.height = style.line_height * size;
        add(layer, std::move(text));
    }

    PathBoxPrim rect_path(double x0, double y0, double x1, double y1, bool fill) const {
        PathBoxPrim box;
        box.start = Point{x0, y0};
        box.segments = {
            {SegmentKind::Line, Point{x1, y0}},
            {SegmentKind::Line, Point{x1, y1}},
            {SegmentKind::Line, Point{x0, y1}},
            {SegmentKind::Line, Point{x0, y0}},
        };
        box.fill = fill;
        return box;
    }

    PathBoxPrim rounded_rect_path(double x0, double y0, double x1, double y1, double radius,
                                  bool fill) const {
        double r = std::min({radius, (x1 - x0) / 2, (y1 - y0) / 2});
        PathBoxPrim box;
        box.start = Point{x0 + r, y0};
        box.segments = {
            {SegmentKind::Line, Point{x1 - r, y0}},
            {SegmentKind::QuarterArc, Point{x1, y0 + r}},
            {SegmentKind::Line, Point{x1, y1 - r}},
            {SegmentKind::QuarterArc, Point{x1 - r, y1}},
            {SegmentKind::Line, Point{x0 + r, y1}},
            {SegmentKind::QuarterArc, Point{x0, y1 - r}},
            {SegmentKind::Line, Point{x0, y0 + r}},
            {SegmentKind::QuarterArc, Point{x0 + r, y0}},
        };
        box.fill = fill;
        return box;
    }

    // Right corners rounded, left corners square (multimeasureD frame).
    PathBoxPrim right_rounded_path(double x0, double y0, double x1, double y1, double radius,
                                   bool fill) const {
        double r = std::min({radius, (x1 - x0) / 2, (y1 - y0) / 2});
        PathBoxPrim box;
        box.start = Point{x0, y0};
        box.segments = {
            {SegmentKind::Line, Point{x1 - r, y0}},
            {SegmentKind::QuarterArc, Point{x1, y0 + r}},
            {SegmentKind::Line, Point{x1, y1 - r}},
            {SegmentKind::QuarterArc, Point{x1 - r, y1}},
            {SegmentKind::Line, Point{x0, y1}},
            {SegmentKind::Line, Point{x0, y0}},
        };
        box.fill = fill;
        return box;
    }

    // Rectangle whose left side collapses into a tab apex at mid height.
    PathBoxPrim tab_path(double x0, double y0, double x1, double y1, bool fill) const {
        PathBoxPrim box;
        box.start = Point{x0, y0};
        box.segments = {
            {SegmentKind::Line, Point{x1, y0}},
            {SegmentKind::Line, Point{x1, y1}},
            {SegmentKind::Line, Point{x0, y1}},
            {SegmentKind::Line, Point{x0 - kMeasureTabDepthEm, (y0 + y1) / 2}},
            {SegmentKind::Line, Point{x0, y0}},
        };
        box.fill = fill;
        return box;
    }

    // Flat left side, right side a half-circle.
    PathBoxPrim dee_path(double x0, double y0, double x1, double y1, bool fill) const {
        double r = (y1 - y0) / 2;
        double xa = std::max(x0, x1 - r);
        PathBoxPrim box;
        box.start = Point{x0, y0};
        box.segments = {
            {SegmentKind::Line, Point{xa, y0}},
            {SegmentKind::HalfArc, Point{xa, y1}},
            {SegmentKind::Line, Point{x0, y1}},
            {SegmentKind::Line, Point{x0, y0}},
        };
        box.fill = fill;
        return box;
    }

    double spanned_width(std::size_t row, std::size_t col, int span) const {
        double width = 0.0;
        for (int k = 0; k <= span; ++k) {
            std::size_t r = row + static_cast<std::size_t>(k);
            if (r >= ast.rows.size() || col >= ast.rows[r].size()) {
                continue;
            }
            width = std::max(width, measure_cell(ast.rows[r][col], style).width);
        }
        return width;
    }

    void emit_multibox(const Element &e, std::size_t r, std::size_t c) {
        const std::size_t bottom_row = r + static_cast<std::size_t>(e.span);
        const double width = spanned_width(r, c, e.span);
        const double x0 = grid.col_x[c] - width / 2;
        const double x1 = grid.col_x[c] + width / 2;
        const double y0 = grid.row_y[r] - grid.row_height[r] / 2;
        const double y1 = grid.row_y[bottom_row] + grid.row_height[bottom_row] / 2;
        if (e.kind == ElementKind::MultiGate) {
            add(kLayerGlyph, rect_path(x0, y0, x1, y1, true));
        } else if (e.kind == ElementKind::MultiMeasure) {
            add(kLayerGlyph, rounded_rect_path(x0, y0, x1, y1, style.measure_pad, true));
        } else {
            add(kLayerGlyph, right_rounded_path(x0, y0, x1, y1, style.measure_pad, true));
        }
        Point label_at{grid.col_x[c], (grid.row_y[r] + grid.row_y[bottom_row]) / 2};
        add_text(label_at, TextAlign::Center, e.label, 1.0, kLayerBoxLabel);
    }

    void emit_gate_group(const Element &e, std::size_t, std::size_t) {
        // 1-based corners as written in source.
        const std::size_t r1 = static_cast<std::size_t>(e.row1 - 1);
        const std::size_t c1 = static_cast<std::size_t>(e.col1 - 1);
        const std::size_t r2 = static_cast<std::size_t>(e.row2 - 1);
        const std::size_t c2 = static_cast<std::size_t>(e.col2 - 1);
        double x0 = grid.col_x[c1];
        double x1 = grid.col_x[c2];
        double y0 = grid.row_y[r1];
        double y1 = grid.row_y[r2];
        for (std::size_t rr : {r1, r2}) {
            for (std::size_t cc : {c1, c2}) {
                Extent extent{0.0, 0.0};
                if (rr < ast.rows.size() && cc < ast.rows[rr].size()) {
                    extent = measure_cell(ast.rows[rr][cc], style);
                }
                x0 = std::min(x0, grid.col_x[cc] - extent.width / 2);
                x1 = std::max(x1, grid.col_x[cc] + extent.width / 2);
                y0 = std::min(y0, grid.row_y[rr] - extent.height / 2);
                y1 = std::max(y1, grid.row_y[rr] + extent.height / 2);
            }
        }
        const double pad = e.pad.to_em();
        x0 -= pad;
        y0 -= pad;
        x1 += pad;
        y1 += pad;

        switch (e.frame) {
            case FrameStyle::Solid:
            case FrameStyle::Dashed:
            case FrameStyle::Dotted: {
                LineStyle ls = e.frame == FrameStyle::Solid
                                   ? LineStyle::Single
                                   : (e.frame == FrameStyle::Dashed ? LineStyle::Dashed
                                                                    : LineStyle::Dotted);
                add(kLayerGroupFrame, LinePrim{{x0, y0}, {x1, y0}, ls});
                add(kLayerGroupFrame, LinePrim{{x1, y0}, {x1, y1}, ls});
                add(kLayerGroupFrame, LinePrim{{x1, y1}, {x0, y1}, ls});
                add(kLayerGroupFrame, LinePrim{{x0, y1}, {x0, y0}, ls});
                break;
            }
            case FrameStyle::BraceLeft:
                add(kLayerGroupFrame,
                    BracePrim{BraceSide::Left, {x0, y0}, {x0, y1}, style.brace_amplitude});
                break;
            case FrameStyle::BraceRight:
                add(kLayerGroupFrame,
                    BracePrim{BraceSide::Right, {x1, y0}, {x1, y1}, style.brace_amplitude});
                break;
            case FrameStyle::BraceTop:
                add(kLayerGroupFrame,
                    BracePrim{BraceSide::Top, {x0, y0}, {x1, y0}, style.brace_amplitude});
                break;
            case FrameStyle::BraceBottom:
                add(kLayerGroupFrame,
                    BracePrim{BraceSide::Bottom, {x0, y1}, {x1, y1}, style.brace_amplitude});
                break;
        }
    }

    void emit_element(const Element &e, std::size_t r, std::size_t c) {
        const Point at = anchor(r, c);
        switch (e.kind) {
            case ElementKind::QWire:
                add_line(at, anchor(r, c + e.dcol), LineStyle::Single, kLayerWire);
                break;
            case ElementKind::CWire:
                add_line(at, anchor(r, c + e.dcol), LineStyle::Double, kLayerWire);
                break;
            case ElementKind::QWireX:
                add_line(at, anchor(r + e.drow, c), LineStyle::Single, kLayerWire);
                break;
            case ElementKind::CWireX:
                add_line(at, anchor(r + e.drow, c), LineStyle::Double, kLayerWire);
                break;
            case ElementKind::Link:
                add_line(at, anchor(r + e.drow, c + e.dcol), LineStyle::Single, kLayerWire);
                break;
            case ElementKind::Gate: {
                Extent extent = measure_element(e, style);
                add(kLayerGlyph, rect_path(at.x - extent.width / 2, at.y - extent.height / 2,
                                           at.x + extent.width / 2, at.y + extent.height / 2,
                                           true));
                add_text(at, TextAlign::Center, e.label, 1.0, kLayerBoxLabel);
                break;
            }
            case ElementKind::Measure: {
                Extent extent = measure_element(e, style);
                add(kLayerGlyph,
                    rounded_rect_path(at.x - extent.width / 2, at.y - extent.height / 2,
                                      at.x + extent.width / 2, at.y + extent.height / 2,
                                      style.measure_pad, true));
                add_text(at, TextAlign::Center, e.label, 1.0, kLayerBoxLabel);
                break;
            }
            case ElementKind::MeasureTab: {
                Extent extent = measure_element(e, style);
                add(kLayerGlyph, tab_path(at.x - extent.width / 2, at.y - extent.height / 2,
                                          at.x + extent.width / 2, at.y + extent.height / 2,
                                          true));
                add_text(at, TextAlign::Center, e.label, 1.0, kLayerBoxLabel);
                break;
            }
            case ElementKind::MeasureD: {
                Extent extent = measure_element(e, style);
                add(kLayerGlyph, dee_path(at.x - extent.width / 2, at.y - extent.height / 2,
                                          at.x + extent.width / 2, at.y + extent.height / 2,
                                          true));
                add_text(at, TextAlign::Center, e.label, 1.0, kLayerBoxLabel);
                break;
            }
            case ElementKind::Meter: {
                const double radius = style.meter_radius;
                MeterGlyphPrim meter;
                meter.center = Point{at.x, at.y + radius / 2};
                meter.radius = radius;
                const Point arc_top{at.x, at.y - radius / 2};
                meter.needle_from = Point{arc_top.x, arc_top.y + kMeterNeedleInsetEm};
                meter.needle_to = Point{meter.needle_from.x + kMeterNeedleDxEm,
                                        meter.needle_from.y - kMeterNeedleDyEm};
                add(kLayerGlyph, std::move(meter));
                break;
            }
            case ElementKind::MultiGate:
            case ElementKind::MultiMeasure:
            case ElementKind::MultiMeasureD:
                emit_multibox(e, r, c);
                break;
            case ElementKind::Ghost:
            case ElementKind::PureGhost:
                break;  // extent only; the ghost wire is a parse-time element
            case ElementKind::Push:
                add_text(at, TextAlign::Center, e.label, 1.0, kLayerBoxLabel);
                break;
            case ElementKind::ControlDot:
                add(kLayerGlyph, DiscPrim{at, style.ctrl_radius});
                break;
            case ElementKind::ControlDotOpen:
                add(kLayerGlyph, CircleOutlinePrim{at, style.open_dot_radius});
                break;
            case ElementKind::Ctrl:
                add_line(at, anchor(r + e.drow, c), LineStyle::Single, kLayerWire);
                add(kLayerGlyph, DiscPrim{at, style.ctrl_radius});
                break;
            case ElementKind::CtrlOpen:
                add_line(at, anchor(r + e.drow, c), LineStyle::Single, kLayerWire);
                add(kLayerGlyph, CircleOutlinePrim{at, style.open_dot_radius});
                break;
            case ElementKind::Targ:
                add(kLayerGlyph, OPlusPrim{at, style.targ_radius});
                break;
            case ElementKind::Swap:
                add(kLayerGlyph, CrossPrim{at, style.swap_arm});
                break;
            case ElementKind::GateGroup:
                emit_gate_group(e, r, c);
                break;
            case ElementKind::LStick:
                add_text(Point{at.x - style.stick_offset, at.y}, TextAlign::Right, e.label, 1.0,
                         kLayerStick);
                break;
            case ElementKind::RStick:
                add_text(Point{at.x + style.stick_offset, at.y}, TextAlign::Left, e.label, 1.0,
                         kLayerStick);
                break;
            case ElementKind::UStick:
                add_text(Point{at.x, at.y - style.stick_offset - style.line_height / 2},
                         TextAlign::Center, e.label, 1.0, kLayerStick);
                break;
            case ElementKind::DStick:
                add_text(Point{at.x, at.y + style.stick_offset + style.line_height / 2},
                         TextAlign::Center, e.label, 1.0, kLayerStick);
                break;
            case ElementKind::Node: {
                Extent extent = measure_element(e, style);
                double radius = std::max(extent.width, extent.height) / 2;
                add(kLayerGlyph, CircleOutlinePrim{at, radius});
                add_text(at, TextAlign::Center, e.label, 1.0, kLayerBoxLabel);
                if (e.super) {
                    double dy = style.line_height / 2 + style.small_scale * style.line_height / 2;
                    add_text(Point{at.x, at.y - dy}, TextAlign::Center, *e.super,
                             style.small_scale, kLayerStick);
                }
                break;
            }
        }
    }

    Scene run() {
        for (std::size_t r = 0; r < ast.rows.size(); ++r) {
            for (std::size_t c = 0; c < ast.rows[r].size(); ++c) {
                cell_lines.clear();
                for (const auto &element : ast.rows[r][c].elements) {
                    emit_element(element, r, c);
                }
            }
        }
        Scene scene;
        for (std::size_t layer = 0; layer < layers.size(); ++layer) {
            for (auto &primitive : layers[layer]) {
                scene.items.push_back(SceneItem{static_cast<int>(layer), std::move(primitive)});
            }
        }
        scene.bounds = bounding_box(scene);
        return scene;
    }
};

void include_point(Rect &rect, bool &first, double x, double y) {
    if (first) {
        rect = Rect{x, y, x, y};
        first = false;
        return;
    }
    rect.left = std::min(rect.left, x);
    rect.top = std::min(rect.top, y);
    rect.right = std::max(rect.right, x);
    rect.bottom = std::max(rect.bottom, y);
}

void include_rect(Rect &rect, bool &first, const Rect &other) {
    include_point(rect, first, other.left, other.top);
    include_point(rect, first, other.right, other.bottom);
}

}  // namespace

Rect primitive_bounds(const Primitive &primitive) {
    Rect rect;
    bool first = true;
    if (const auto *line = std::get_if<LinePrim>(&primitive)) {
        include_point(rect, first, line->p1.x, line->p1.y);
        include_point(rect, first, line->p2.x, line->p2.y);
    } else if (const auto *box = std::get_if<PathBoxPrim>(&primitive)) {
        Point prev = box->start;
        include_point(rect, first, prev.x, prev.y);
        for (const auto &seg : box->segments) {
            include_point(rect, first, seg.to.x, seg.to.y);
            if (seg.kind == SegmentKind::HalfArc) {
                // Clockwise half arc bulges out by its radius at midpoint.
                double mx = (prev.x + seg.to.x) / 2;
                double my = (prev.y + seg.to.y) / 2;
                double dx = prev.x - mx;
                double dy = prev.y - my;
                include_point(rect, first, mx - dy, my + dx);
            }
            prev = seg.to;
        }
    } else if (const auto *disc = std::get_if<DiscPrim>(&primitive)) {
        include_rect(rect, first,
                     Rect{disc->center.x - disc->radius, disc->center.y - disc->radius,
                          disc->center.x + disc->radius, disc->center.y + disc->radius});
    } else if (const auto *circle = std::get_if<CircleOutlinePrim>(&primitive)) {
        include_rect(rect, first,
                     Rect{circle->center.x - circle->radius, circle->center.y - circle->radius,
                          circle->center.x + circle->radius, circle->center.y + circle->radius});
    } else if (const auto *text = std::get_if<TextRunPrim>(&primitive)) {
        double x0 = text->anchor.x;
        double x1 = text->anchor.x;
        switch (text->align) {
            case TextAlign::Center:
                x0 -= text->width / 2;
                x1 += text->width / 2;
                break;
            case TextAlign::Left:
                x1 += text->width;
                break;
            case TextAlign::Right:
                x0 -= text->width;
                break;
        }
        include_rect(rect, first,
                     Rect{x0, text->anchor.y - text->height / 2, x1,
                          text->anchor.y + text->height / 2});
    } else if (const auto *cross = std::get_if<CrossPrim>(&primitive)) {
        include_rect(rect, first,
                     Rect{cross->center.x - cross->arm, cross->center.y - cross->arm,
                          cross->center.x + cross->arm, cross->center.y + cross->arm});
    } else if (const auto *oplus = std::get_if<OPlusPrim>(&primitive)) {
        include_rect(rect, first,
                     Rect{oplus->center.x - oplus->radius, oplus->center.y - oplus->radius,
                          oplus->center.x + oplus->radius, oplus->center.y + oplus->radius});
    } else if (const auto *meter = std::get_if<MeterGlyphPrim>(&primitive)) {
        include_rect(rect, first,
                     Rect{meter->center.x - meter->radius, meter->center.y - meter->radius,
                          meter->center.x + meter->radius, meter->center.y});
        include_point(rect, first, meter->needle_from.x, meter->needle_from.y);
        include_point(rect, first, meter->needle_to.x, meter->needle_to.y);
    } else if (const auto *brace = std::get_if<BracePrim>(&primitive)) {
        include_point(rect, first, brace->from.x, brace->from.y);
        include_point(rect, first, brace->to.x, brace->to.y);
        switch (brace->side) {
            case BraceSide::Left:
                rect.left -= brace->amplitude;
                break;
            case BraceSide::Right:
                rect.right += brace->amplitude;
                break;
            case BraceSide::Top:
                rect.top -= brace->amplitude;
                break;
            case BraceSide::Bottom:
                rect.bottom += brace->amplitude;
                break;
        }
    }
    return rect;
}

Rect bounding_box(const Scene &scene) {
    Rect rect;
    bool first = true;
    for (const auto &item : scene.items) {
        include_rect(rect, first, primitive_bounds(item.primitive));
    }
    if (first) {
        return Rect{0, 0, 0, 0};
    }
    return rect;
}

Scene plan_scene(const CircuitAst &ast, const GridGeometry &grid, const StyleConfig &style) {
    Planner planner{ast, grid, style, {}, {}};
    return planner.run();
}

}  // namespace qcir
