#include <cmath>

#include "fmt_util.hpp"
#include "qcir/render.hpp"

namespace qcir {

namespace {

using detail::fmt3;

constexpr double kOPlusVerticalArm = 0.9;  // vertical arm as a fraction of radius
constexpr double kDashOn = 0.45;           // em
constexpr double kDashOff = 0.3;
constexpr double kDotOn = 0.1;
constexpr double kDotOff = 0.25;

std::string xml_escape(const std::string &text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&':
                out += "&amp;";
                break;
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '"':
                out += "&quot;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

struct SvgWriter {
    const StyleConfig &style;
    Rect bounds;
    std::string out;

    double px(double em) const {
        return em * style.px_per_em;
    }
    double map_x(double x) const {
        return (x - bounds.left + style.margin) * style.px_per_em;
    }
    double map_y(double y) const {
        return (y - bounds.top + style.margin) * style.px_per_em;
    }
    std::string stroke_width() const {
        return fmt3(px(style.stroke_width));
    }

    void attr(const char *name, const std::string &value) {
        out += ' ';
        out += name;
        out += "=\"";
        out += value;
        out += '"';
    }

    void stroke_attrs(LineStyle line_style) {
        attr("stroke", "black");
        attr("stroke-width", stroke_width());
        if (line_style == LineStyle::Dashed) {
            attr("stroke-dasharray", fmt3(px(kDashOn)) + " " + fmt3(px(kDashOff)));
        } else if (line_style == LineStyle::Dotted) {
            attr("stroke-dasharray", fmt3(px(kDotOn)) + " " + fmt3(px(kDotOff)));
        }
    }

    void line_at(double x1, double y1, double x2, double y2, LineStyle line_style) {
        out += "<line";
        attr("x1", fmt3(x1));
        attr("y1", fmt3(y1));
        attr("x2", fmt3(x2));
        attr("y2", fmt3(y2));
        stroke_attrs(line_style);
        out += "/>\n";
    }

    void operator()(const LinePrim &line) {
        double x1 = map_x(line.p1.x);
        double y1 = map_y(line.p1.y);
        double x2 = map_x(line.p2.x);
        double y2 = map_y(line.p2.y);
        if (line.style == LineStyle::Double) {
            double dx = x2 - x1;
            double dy = y2 - y1;
            double len = std::hypot(dx, dy);
            if (len <= 0) {
                return;
            }
            double nx = -dy / len * px(style.double_gap) / 2;
            double ny = dx / len * px(style.double_gap) / 2;
            line_at(x1 + nx, y1 + ny, x2 + nx, y2 + ny, LineStyle::Single);
            line_at(x1 - nx, y1 - ny, x2 - nx, y2 - ny, LineStyle::Single);
            return;
        }
        line_at(x1, y1, x2, y2, line.style);
    }

    void operator()(const PathBoxPrim &box) {
        out += "<path";
        std::string d = "M " + fmt3(map_x(box.start.x)) + " " + fmt3(map_y(box.start.y));
        Point prev = box.start;
        for (const auto &seg : box.segments) {
            double tx = map_x(seg.to.x);
            double ty = map_y(seg.to.y);
            if (seg.kind == SegmentKind::Line) {
                d += " L " + fmt3(tx) + " " + fmt3(ty);
            } else {
                double radius = seg.kind == SegmentKind::QuarterArc
                                    ? std::abs(seg.to.x - prev.x)
                                    : std::hypot(seg.to.x - prev.x, seg.to.y - prev.y) / 2;
                std::string r = fmt3(px(radius));
                d += " A " + r + " " + r + " 0 0 1 " + fmt3(tx) + " " + fmt3(ty);
            }
            prev = seg.to;
        }
        d += " Z";
        attr("d", d);
        attr("fill", box.fill ? "white" : "none");
        attr("stroke", "black");
        attr("stroke-width", stroke_width());
        out += "/>\n";
    }

    void operator()(const DiscPrim &disc) {
        out += "<circle";
        attr("cx", fmt3(map_x(disc.center.x)));
        attr("cy", fmt3(map_y(disc.center.y)));
        attr("r", fmt3(px(disc.radius)));
        attr("fill", "black");
        out += "/>\n";
    }

    void operator()(const CircleOutlinePrim &circle) {
        out += "<circle";
        attr("cx", fmt3(map_x(circle.center.x)));
        attr("cy", fmt3(map_y(circle.center.y)));
        attr("r", fmt3(px(circle.radius)));
        attr("fill", "white");
        attr("stroke", "black");
        attr("stroke-width", stroke_width());
        out += "/>\n";
    }

    void operator()(const TextRunPrim &text) {
        out += "<text";
        attr("x", fmt3(map_x(text.anchor.x)));
        attr("y", fmt3(map_y(text.anchor.y)));
        const char *anchor = text.align == TextAlign::Center
                                 ? "middle"
                                 : (text.align == TextAlign::Left ? "start" : "end");
        attr("text-anchor", anchor);
        attr("dominant-baseline", "central");
        attr("font-family", xml_escape(style.font_family));
        attr("font-size", fmt3(px(text.size)));
        out += '>';
        for (const auto &run : text.runs.runs) {
            if (run.style == RunStyle::Normal) {
                out += xml_escape(run.text);
                continue;
            }
            out += "<tspan";
            if (run.style == RunStyle::Superscript) {
                attr("baseline-shift", "super");
            } else if (run.style == RunStyle::Subscript) {
                attr("baseline-shift", "sub");
            }
            attr("font-size", fmt3(px(text.size * style.small_scale)));
            out += '>';
            out += xml_escape(run.text);
            out += "</tspan>";
        }
        out += "</text>\n";
    }

    void operator()(const CrossPrim &cross) {
        double cx = map_x(cross.center.x);
        double cy = map_y(cross.center.y);
        double arm = px(cross.arm);
        line_at(cx - arm, cy - arm, cx + arm, cy + arm, LineStyle::Single);
        line_at(cx + arm, cy - arm, cx - arm, cy + arm, LineStyle::Single);
    }

    void operator()(const OPlusPrim &oplus) {
        double cx = map_x(oplus.center.x);
        double cy = map_y(oplus.center.y);
        double r = px(oplus.radius);
        out += "<circle";
        attr("cx", fmt3(cx));
        attr("cy", fmt3(cy));
        attr("r", fmt3(r));
        attr("fill", "white");
        attr("stroke", "black");
        attr("stroke-width", stroke_width());
        out += "/>\n";
        line_at(cx - r, cy, cx + r, cy, LineStyle::Single);
        double vertical = r * kOPlusVerticalArm;
        line_at(cx, cy - vertical, cx, cy + vertical, LineStyle::Single);
    }

    void operator()(const MeterGlyphPrim &meter) {
        double cx = map_x(meter.center.x);
        double cy = map_y(meter.center.y);
        double r = px(meter.radius);
        out += "<path";
        std::string d = "M " + fmt3(cx - r) + " " + fmt3(cy);
        d += " A " + fmt3(r) + " " + fmt3(r) + " 0 0 1 " + fmt3(cx + r) + " " + fmt3(cy);
        d += " Z";
        attr("d", d);
        attr("fill", "white");
        attr("stroke", "black");
        attr("stroke-width", stroke_width());
        out += "/>\n";
        line_at(map_x(meter.needle_from.x), map_y(meter.needle_from.y), map_x(meter.needle_to.x),
                map_y(meter.needle_to.y), LineStyle::Single);
    }

    void arc_to(std::string &d, Point from, Point to, double radius, Point center) {
        // Sweep picked so the arc bends away from the center.
        double cross = (from.x - center.x) * (to.y - center.y) -
                       (from.y - center.y) * (to.x - center.x);
        const char *sweep = cross > 0 ? "1" : "0";
        std::string r = fmt3(px(radius));
        d += " A " + r + " " + r + " 0 0 ";
        d += sweep;
        d += " " + fmt3(map_x(to.x)) + " " + fmt3(map_y(to.y));
    }

    void operator()(const BracePrim &brace) {
        // Two quarter arcs curling toward the content plus two straight
        // runs meeting at the side's midpoint.
        double a = brace.amplitude;
        Point f = brace.from;
        Point t = brace.to;
        double ox = 0;
        double oy = 0;
        switch (brace.side) {
            case BraceSide::Left:
                ox = -a;
                break;
            case BraceSide::Right:
                ox = a;
                break;
            case BraceSide::Top:
                oy = -a;
                break;
            case BraceSide::Bottom:
                oy = a;
                break;
        }
        bool vertical = ox != 0;
        Point arc1_end = vertical ? Point{f.x + ox, f.y + a} : Point{f.x + a, f.y + oy};
        Point arc1_center = vertical ? Point{f.x, f.y + a} : Point{f.x + a, f.y};
        Point arc2_start = vertical ? Point{t.x + ox, t.y - a} : Point{t.x - a, t.y + oy};
        Point arc2_center = vertical ? Point{t.x, t.y - a} : Point{t.x - a, t.y};
        Point mid = vertical ? Point{f.x + ox, (f.y + t.y) / 2} : Point{(f.x + t.x) / 2, f.y + oy};

        out += "<path";
        std::string d = "M " + fmt3(map_x(f.x)) + " " + fmt3(map_y(f.y));
        arc_to(d, f, arc1_end, a, arc1_center);
        d += " L " + fmt3(map_x(mid.x)) + " " + fmt3(map_y(mid.y));
        d += " L " + fmt3(map_x(arc2_start.x)) + " " + fmt3(map_y(arc2_start.y));
        arc_to(d, arc2_start, t, a, arc2_center);
        attr("d", d);
        attr("fill", "none");
        attr("stroke", "black");
        attr("stroke-width", stroke_width());
        out += "/>\n";
    }
};

}  // namespace

std::string render_svg(const Scene &scene, const StyleConfig &style) {
    SvgWriter writer{style, scene.bounds, {}};
    double width = (scene.bounds.width() + 2 * style.margin) * style.px_per_em;
    double height = (scene.bounds.height() + 2 * style.margin) * style.px_per_em;

    writer.out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    writer.out += "<svg";
    writer.attr("xmlns", "http://www.w3.org/2000/svg");
    writer.attr("width", fmt3(width));
    writer.attr("height", fmt3(height));
    writer.attr("viewBox", "0 0 " + fmt3(width) + " " + fmt3(height));
    writer.out += ">\n";
    if (style.background == Background::White) {
        writer.out += "<rect";
        writer.attr("x", fmt3(0.0));
        writer.attr("y", fmt3(0.0));
        writer.attr("width", fmt3(width));
        writer.attr("height", fmt3(height));
        writer.attr("fill", "white");
        writer.out += "/>\n";
    }
    for (const auto &item : scene.items) {
        std::visit(writer, item.primitive);
    }
    writer.out += "</svg>\n";
    return std::move(writer.out);
}

}  // namespace qcir
