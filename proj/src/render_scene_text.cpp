#include "qcir/render.hpp"

#include "fmt_util.hpp"

namespace qcir {

namespace {

using detail::fmt4;

const char *line_style_name(LineStyle style) {
    switch (style) {
        case LineStyle::Single:
            return "single";
        case LineStyle::Double:
            return "double";
        case LineStyle::Dashed:
            return "dashed";
        case LineStyle::Dotted:
            return "dotted";
    }
    return "single";
}

const char *align_name(TextAlign align) {
    switch (align) {
        case TextAlign::Center:
            return "center";
        case TextAlign::Left:
            return "left";
        case TextAlign::Right:
            return "right";
    }
    return "center";
}

const char *side_name(BraceSide side) {
    switch (side) {
        case BraceSide::Left:
            return "left";
        case BraceSide::Right:
            return "right";
        case BraceSide::Top:
            return "top";
        case BraceSide::Bottom:
            return "bottom";
    }
    return "left";
}

const char *run_style_name(RunStyle style) {
    switch (style) {
        case RunStyle::Normal:
            return "n";
        case RunStyle::Superscript:
            return "sup";
        case RunStyle::Subscript:
            return "sub";
        case RunStyle::Small:
            return "sm";
    }
    return "n";
}

void append_quoted(std::string &out, const std::string &text) {
    out += '"';
    for (char c : text) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    out += '"';
}

void append_point(std::string &out, const Point &p) {
    out += ' ';
    out += fmt4(p.x);
    out += ' ';
    out += fmt4(p.y);
}

struct Writer {
    std::string out;

    void operator()(const LinePrim &line) {
        out += " line ";
        out += line_style_name(line.style);
        append_point(out, line.p1);
        append_point(out, line.p2);
    }
    void operator()(const PathBoxPrim &box) {
        out += " path ";
        out += box.fill ? "filled" : "open";
        append_point(out, box.start);
        for (const auto &seg : box.segments) {
            switch (seg.kind) {
                case SegmentKind::Line:
                    out += " line";
                    break;
                case SegmentKind::QuarterArc:
                    out += " arc4";
                    break;
                case SegmentKind::HalfArc:
                    out += " arc2";
                    break;
            }
            append_point(out, seg.to);
        }
    }
    void operator()(const DiscPrim &disc) {
        out += " disc";
        append_point(out, disc.center);
        out += ' ';
        out += fmt4(disc.radius);
    }
    void operator()(const CircleOutlinePrim &circle) {
        out += " circle";
        append_point(out, circle.center);
        out += ' ';
        out += fmt4(circle.radius);
    }
    void operator()(const TextRunPrim &text) {
        out += " text ";
        out += align_name(text.align);
        append_point(out, text.anchor);
        out += ' ';
        out += fmt4(text.size);
        for (const auto &run : text.runs.runs) {
            out += ' ';
            out += run_style_name(run.style);
            out += ':';
            append_quoted(out, run.text);
        }
    }
    void operator()(const CrossPrim &cross) {
        out += " cross";
        append_point(out, cross.center);
        out += ' ';
        out += fmt4(cross.arm);
    }
    void operator()(const OPlusPrim &oplus) {
        out += " oplus";
        append_point(out, oplus.center);
        out += ' ';
        out += fmt4(oplus.radius);
    }
    void operator()(const MeterGlyphPrim &meter) {
        out += " meter";
        append_point(out, meter.center);
        out += ' ';
        out += fmt4(meter.radius);
        append_point(out, meter.needle_from);
        append_point(out, meter.needle_to);
    }
    void operator()(const BracePrim &brace) {
        out += " brace ";
        out += side_name(brace.side);
        append_point(out, brace.from);
        append_point(out, brace.to);
        out += ' ';
        out += fmt4(brace.amplitude);
    }
};

}  // namespace

std::string render_scene_text(const Scene &scene) {
    Writer writer;
    writer.out += "bounds " + fmt4(scene.bounds.left) + ' ' + fmt4(scene.bounds.top) + ' ' +
                  fmt4(scene.bounds.right) + ' ' + fmt4(scene.bounds.bottom) + '\n';
    for (const auto &item : scene.items) {
        writer.out += std::to_string(item.layer);
        std::visit(writer, item.primitive);
        writer.out += '\n';
    }
    return std::move(writer.out);
}

}  // namespace qcir
