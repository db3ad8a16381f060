#include "qcir/element.hpp"

namespace qcir {

namespace elem {

namespace {

Element of_kind(ElementKind kind) {
    Element e;
    e.kind = kind;
    return e;
}

}  // namespace

Element qw(int dcol) {
    Element e = of_kind(ElementKind::QWire);
    e.dcol = dcol;
    return e;
}

Element qwx(int drow) {
    Element e = of_kind(ElementKind::QWireX);
    e.drow = drow;
    return e;
}

Element cw(int dcol) {
    Element e = of_kind(ElementKind::CWire);
    e.dcol = dcol;
    return e;
}

Element cwx(int drow) {
    Element e = of_kind(ElementKind::CWireX);
    e.drow = drow;
    return e;
}

Element gate(LabelText label) {
    Element e = of_kind(ElementKind::Gate);
    e.label = std::move(label);
    return e;
}

Element meter() {
    return of_kind(ElementKind::Meter);
}

Element measure(LabelText label) {
    Element e = of_kind(ElementKind::Measure);
    e.label = std::move(label);
    return e;
}

Element measure_tab(LabelText label) {
    Element e = of_kind(ElementKind::MeasureTab);
    e.label = std::move(label);
    return e;
}

Element measure_d(LabelText label) {
    Element e = of_kind(ElementKind::MeasureD);
    e.label = std::move(label);
    return e;
}

Element multi_measure(int span, LabelText label) {
    Element e = of_kind(ElementKind::MultiMeasure);
    e.span = span;
    e.label = std::move(label);
    return e;
}

Element multi_measure_d(int span, LabelText label) {
    Element e = of_kind(ElementKind::MultiMeasureD);
    e.span = span;
    e.label = std::move(label);
    return e;
}

Element multi_gate(int span, LabelText label) {
    Element e = of_kind(ElementKind::MultiGate);
    e.span = span;
    e.label = std::move(label);
    return e;
}

Element ghost(LabelText label) {
    Element e = of_kind(ElementKind::Ghost);
    e.label = std::move(label);
    return e;
}

Element pure_ghost(LabelText label) {
    Element e = of_kind(ElementKind::PureGhost);
    e.label = std::move(label);
    return e;
}

Element push(LabelText label) {
    Element e = of_kind(ElementKind::Push);
    e.label = std::move(label);
    return e;
}

Element control_dot() {
    return of_kind(ElementKind::ControlDot);
}

Element control_dot_open() {
    return of_kind(ElementKind::ControlDotOpen);
}

Element ctrl(int drow) {
    Element e = of_kind(ElementKind::Ctrl);
    e.drow = drow;
    return e;
}

Element ctrl_open(int drow) {
    Element e = of_kind(ElementKind::CtrlOpen);
    e.drow = drow;
    return e;
}

Element targ() {
    return of_kind(ElementKind::Targ);
}

Element swap() {
    return of_kind(ElementKind::Swap);
}

Element gate_group(int row1, int col1, int row2, int col2, Dim pad, FrameStyle frame) {
    Element e = of_kind(ElementKind::GateGroup);
    e.row1 = row1;
    e.col1 = col1;
    e.row2 = row2;
    e.col2 = col2;
    e.pad = pad;
    e.frame = frame;
    return e;
}

Element lstick(LabelText label) {
    Element e = of_kind(ElementKind::LStick);
    e.label = std::move(label);
    return e;
}

Element rstick(LabelText label) {
    Element e = of_kind(ElementKind::RStick);
    e.label = std::move(label);
    return e;
}

Element ustick(LabelText label) {
    Element e = of_kind(ElementKind::UStick);
    e.label = std::move(label);
    return e;
}

Element dstick(LabelText label) {
    Element e = of_kind(ElementKind::DStick);
    e.label = std::move(label);
    return e;
}

Element node(std::optional<LabelText> super, LabelText label) {
    Element e = of_kind(ElementKind::Node);
    e.super = std::move(super);
    e.label = std::move(label);
    return e;
}

Element link(int drow, int dcol) {
    Element e = of_kind(ElementKind::Link);
    e.drow = drow;
    e.dcol = dcol;
    return e;
}

}  // namespace elem

std::string_view command_name(ElementKind kind) {
    switch (kind) {
        case ElementKind::QWire:
            return "qw";
        case ElementKind::QWireX:
            return "qwx";
        case ElementKind::CWire:
            return "cw";
        case ElementKind::CWireX:
            return "cwx";
        case ElementKind::Gate:
            return "gate";
        case ElementKind::Meter:
            return "meter";
        case ElementKind::Measure:
            return "measure";
        case ElementKind::MeasureTab:
            return "measuretab";
        case ElementKind::MeasureD:
            return "measureD";
        case ElementKind::MultiMeasure:
            return "multimeasure";
        case ElementKind::MultiMeasureD:
            return "multimeasureD";
        case ElementKind::MultiGate:
            return "multigate";
        case ElementKind::Ghost:
            return "ghost";
        case ElementKind::PureGhost:
            return "pureghost";
        case ElementKind::Push:
            return "push";
        case ElementKind::ControlDot:
            return "control";
        case ElementKind::ControlDotOpen:
            return "controlo";
        case ElementKind::Ctrl:
            return "ctrl";
        case ElementKind::CtrlOpen:
            return "ctrlo";
        case ElementKind::Targ:
            return "targ";
        case ElementKind::Swap:
            return "qswap";
        case ElementKind::GateGroup:
            return "gategroup";
        case ElementKind::LStick:
            return "lstick";
        case ElementKind::RStick:
            return "rstick";
        case ElementKind::UStick:
            return "ustick";
        case ElementKind::DStick:
            return "dstick";
        case ElementKind::Node:
            return "node";
        case ElementKind::Link:
            return "link";
    }
    return "";
}

std::string_view frame_token(FrameStyle style) {
    switch (style) {
        case FrameStyle::Solid:
            return "-";
        case FrameStyle::Dashed:
            return "--";
        case FrameStyle::Dotted:
            return ".";
        case FrameStyle::BraceLeft:
            return "\\{";
        case FrameStyle::BraceRight:
            return "\\}";
        case FrameStyle::BraceTop:
            return "^\\}";
        case FrameStyle::BraceBottom:
            return "_\\}";
    }
    return "-";
}

std::optional<FrameStyle> parse_frame_token(std::string_view token) {
    // Trim surrounding whitespace.
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) {
        token.remove_prefix(1);
    }
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) {
        token.remove_suffix(1);
    }
    if (token == "-") {
        return FrameStyle::Solid;
    }
    if (token == "--") {
        return FrameStyle::Dashed;
    }
    if (token == ".") {
        return FrameStyle::Dotted;
    }
    if (token == "\\{") {
        return FrameStyle::BraceLeft;
    }
    if (token == "\\}") {
        return FrameStyle::BraceRight;
    }
    if (token == "^\\}") {
        return FrameStyle::BraceTop;
    }
    if (token == "_\\}") {
        return FrameStyle::BraceBottom;
    }
    return std::nullopt;
}

}  // namespace qcir
