#pragma once

#include <optional>
#include <string_view>

#include "qcir/dimension.hpp"
#include "qcir/label.hpp"

namespace qcir {

// One variant per command in the Qcircuit vocabulary.
enum class ElementKind {
    QWire,
    QWireX,
    CWire,
    CWireX,
    Gate,
    Meter,
    Measure,
    MeasureTab,
    MeasureD,
    MultiMeasure,
    MultiMeasureD,
    MultiGate,
    Ghost,
    PureGhost,
    Push,
    ControlDot,
    ControlDotOpen,
    Ctrl,
    CtrlOpen,
    Targ,
    Swap,
    GateGroup,
    LStick,
    RStick,
    UStick,
    DStick,
    Node,
    Link,
};

inline constexpr int kElementKindCount = 28;

enum class FrameStyle {
    Solid,
    Dashed,
    Dotted,
    BraceLeft,
    BraceRight,
    BraceTop,
    BraceBottom,
};

// Flat element record; only the fields meaningful for `kind` are set, the
// rest stay at their zero defaults so defaulted equality works.
struct Element {
    ElementKind kind = ElementKind::QWire;

    int drow = 0;  // QWireX/CWireX/Ctrl/CtrlOpen/Link row offset
    int dcol = 0;  // QWire/CWire/Link column offset
    int span = 0;  // MultiGate/MultiMeasure(D): rows covered below the anchor

    LabelText label;
    std::optional<LabelText> super;  // Node superscript

    // GateGroup corners, 1-based as written in source.
    int row1 = 0, col1 = 0, row2 = 0, col2 = 0;
    Dim pad;
    FrameStyle frame = FrameStyle::Solid;

    bool operator==(const Element &other) const = default;

    bool is_wire() const {
        return kind == ElementKind::QWire || kind == ElementKind::CWire ||
               kind == ElementKind::QWireX || kind == ElementKind::CWireX;
    }
};

namespace elem {

Element qw(int dcol = -1);
Element qwx(int drow = -1);
Element cw(int dcol = -1);
Element cwx(int drow = -1);
Element gate(LabelText label);
Element meter();
Element measure(LabelText label);
Element measure_tab(LabelText label);
Element measure_d(LabelText label);
Element multi_measure(int span, LabelText label);
Element multi_measure_d(int span, LabelText label);
Element multi_gate(int span, LabelText label);
Element ghost(LabelText label);
Element pure_ghost(LabelText label);
Element push(LabelText label);
Element control_dot();
Element control_dot_open();
Element ctrl(int drow);
Element ctrl_open(int drow);
Element targ();
Element swap();
Element gate_group(int row1, int col1, int row2, int col2, Dim pad, FrameStyle frame);
Element lstick(LabelText label);
Element rstick(LabelText label);
Element ustick(LabelText label);
Element dstick(LabelText label);
Element node(std::optional<LabelText> super, LabelText label);
Element link(int drow, int dcol);

}  // namespace elem

// Command name (without backslash) for each kind, e.g. "qw", "gategroup".
std::string_view command_name(ElementKind kind);

// Frame token as written in source: "-", "--", ".", "\\{", "\\}", "^\\}", "_\\}".
std::string_view frame_token(FrameStyle style);
std::optional<FrameStyle> parse_frame_token(std::string_view token);

}  // namespace qcir
