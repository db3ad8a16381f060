#pragma once

#include <variant>
#include <vector>

#include "qcir/geometry.hpp"

namespace qcir {

struct Point {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point &other) const = default;
};

struct Rect {
    double left = 0.0;
    double top = 0.0;
    double right = 0.0;
    double bottom = 0.0;

    double width() const {
        return right - left;
    }
    double height() const {
        return bottom - top;
    }
};

enum class LineStyle {
    Single,
    Double,
    Dashed,
    Dotted,
};

struct LinePrim {
    Point p1;
    Point p2;
    LineStyle style = LineStyle::Single;
};

// Closed outline wound clockwise (y grows downward); arcs bulge outward
// and are always drawn with the clockwise sweep. A quarter arc spans one
// rounded corner (|dx| == |dy| == radius); a half arc spans a full
// diameter between its endpoints.
enum class SegmentKind {
    Line,
    QuarterArc,
    HalfArc,
};

struct PathSegment {
    SegmentKind kind = SegmentKind::Line;
    Point to;
};

struct PathBoxPrim {
    Point start;
    std::vector<PathSegment> segments;
    bool fill = true;
};

struct DiscPrim {
    Point center;
    double radius = 0.0;
};

struct CircleOutlinePrim {
    Point center;
    double radius = 0.0;
};

enum class TextAlign {
    Center,
    Left,
    Right,
};

// `anchor` is the vertical center of the line of text; align says which
// horizontal edge sits on the anchor. `width` and `height` are the drawn
// extent per the metrics table, in em.
struct TextRunPrim {
    Point anchor;
    TextAlign align = TextAlign::Center;
    LabelText runs;
    double size = 1.0;
    double width = 0.0;
    double height = 0.0;
};

struct CrossPrim {
    Point center;
    double arm = 0.0;
};

struct OPlusPrim {
    Point center;
    double radius = 0.0;
};

// Half-disc opening downward plus the needle line.
struct MeterGlyphPrim {
    Point center;  // center of the full circle (on the flat side)
    double radius = 0.0;
    Point needle_from;
    Point needle_to;
};

enum class BraceSide {
    Left,
    Right,
    Top,
    Bottom,
};

struct BracePrim {
    BraceSide side = BraceSide::Left;
    Point from;
    Point to;
    double amplitude = 0.0;
};

using Primitive = std::variant<
    LinePrim,
    PathBoxPrim,
    DiscPrim,
    CircleOutlinePrim,
    TextRunPrim,
    CrossPrim,
    OPlusPrim,
    MeterGlyphPrim,
    BracePrim>;

// Fixed z-layers; primitives keep emission order within a layer.
inline constexpr int kLayerGroupFrame = 0;
inline constexpr int kLayerWire = 1;
inline constexpr int kLayerGlyph = 2;
inline constexpr int kLayerBoxLabel = 3;
inline constexpr int kLayerStick = 4;

struct SceneItem {
    int layer = 0;
    Primitive primitive;
};

struct Scene {
    std::vector<SceneItem> items;  // sorted by (layer, emission index)
    Rect bounds;
};

// Minimal axis-aligned rectangle covering the primitive, text included.
Rect primitive_bounds(const Primitive &primitive);

// Minimal rectangle covering all primitives; (0,0,0,0) for an empty scene.
Rect bounding_box(const Scene &scene);

// Plans the z-ordered primitive list for a validated ast on its grid.
Scene plan_scene(const CircuitAst &ast, const GridGeometry &grid, const StyleConfig &style);

}  // namespace qcir
