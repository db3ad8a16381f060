#include <doctest.h>

#include <cmath>
#include <set>

#include "qcir/parser.hpp"
#include "qcir/render.hpp"
#include "qcir/scene.hpp"
#include "qcir/validate.hpp"

#include "support/ast_gen.hpp"

using namespace qcir;

namespace {

const StyleConfig kStyle{};

Scene scene_of(const char *source) {
    auto result = parse(source);
    REQUIRE(result.ok());
    REQUIRE(!has_errors(validate(*result.ast)));
    GridGeometry grid = grid_geometry(*result.ast, kStyle);
    return plan_scene(*result.ast, grid, kStyle);
}

template <typename T>
std::vector<const T *> items_of(const Scene &scene, int layer = -1) {
    std::vector<const T *> out;
    for (const auto &item : scene.items) {
        if (layer >= 0 && item.layer != layer) {
            continue;
        }
        if (const T *p = std::get_if<T>(&item.primitive)) {
            out.push_back(p);
        }
    }
    return out;
}

bool near(double a, double b, double eps = 1e-9) {
    return std::abs(a - b) <= eps;
}

}  // namespace

TEST_CASE("wire and opaque box from a one-row circuit") {
    Scene scene = scene_of("\\Qcircuit { & \\gate{H} & \\qw }");
    auto lines = items_of<LinePrim>(scene, kLayerWire);
    REQUIRE(lines.size() == 1);
    // Wire runs from anchor(0,2) to anchor(0,1); one row means equal y.
    CHECK(lines[0]->p1.y == lines[0]->p2.y);
    CHECK(lines[0]->p1.x > lines[0]->p2.x);
    auto boxes = items_of<PathBoxPrim>(scene, kLayerGlyph);
    REQUIRE(boxes.size() == 1);
    CHECK(boxes[0]->fill);
    auto labels = items_of<TextRunPrim>(scene, kLayerBoxLabel);
    REQUIRE(labels.size() == 1);
    CHECK(labels[0]->runs.runs[0].text == "H");
}

TEST_CASE("control over target emits dot, drop and oplus") {
    Scene scene = scene_of("\\Qcircuit { & \\ctrl{1} \\\\ & \\targ }");
    auto discs = items_of<DiscPrim>(scene, kLayerGlyph);
    REQUIRE(discs.size() == 1);
    CHECK(discs[0]->radius == kStyle.ctrl_radius);
    auto pluses = items_of<OPlusPrim>(scene, kLayerGlyph);
    REQUIRE(pluses.size() == 1);
    CHECK(pluses[0]->radius == kStyle.targ_radius);
    // The drop is vertical from the dot to the oplus.
    auto lines = items_of<LinePrim>(scene, kLayerWire);
    bool found = false;
    for (const auto *line : lines) {
        if (near(line->p1.x, discs[0]->center.x) && near(line->p2.x, pluses[0]->center.x) &&
            near(line->p1.y, discs[0]->center.y) && near(line->p2.y, pluses[0]->center.y)) {
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("empty circuit plans an empty scene") {
    Scene scene = scene_of("\\Qcircuit { \\\\ }");
    CHECK(scene.items.empty());
    CHECK(scene.bounds.left == 0.0);
    CHECK(scene.bounds.top == 0.0);
    CHECK(scene.bounds.right == 0.0);
    CHECK(scene.bounds.bottom == 0.0);
}

TEST_CASE("horizontal wires are horizontal and verticals vertical") {
    testgen::Rng rng(31415);
    for (int i = 0; i < 60; ++i) {
        CircuitAst ast = testgen::random_valid_ast(rng);
        GridGeometry grid = grid_geometry(ast, kStyle);
        Scene scene = plan_scene(ast, grid, kStyle);
        for (const auto &item : scene.items) {
            if (item.layer != kLayerWire) {
                continue;
            }
            const auto *line = std::get_if<LinePrim>(&item.primitive);
            if (!line) {
                continue;
            }
            bool horizontal = near(line->p1.y, line->p2.y);
            bool vertical = near(line->p1.x, line->p2.x);
            bool diagonal_link = !horizontal && !vertical;
            // Only \link may be diagonal.
            if (diagonal_link) {
                bool has_link = false;
                for (const auto &row : ast.rows) {
                    for (const auto &cell : row) {
                        for (const auto &e : cell.elements) {
                            has_link |= e.kind == ElementKind::Link;
                        }
                    }
                }
                CHECK(has_link);
            }
        }
    }
}

TEST_CASE("every wire endpoint lies on a cell anchor") {
    testgen::Rng rng(14142);
    for (int i = 0; i < 60; ++i) {
        CircuitAst ast = testgen::random_valid_ast(rng);
        GridGeometry grid = grid_geometry(ast, kStyle);
        Scene scene = plan_scene(ast, grid, kStyle);
        auto on_anchor = [&](const Point &p) {
            for (double x : grid.col_x) {
                for (double y : grid.row_y) {
                    if (near(p.x, x) && near(p.y, y)) {
                        return true;
                    }
                }
            }
            return false;
        };
        for (const auto &item : scene.items) {
            if (item.layer != kLayerWire) {
                continue;
            }
            const auto *line = std::get_if<LinePrim>(&item.primitive);
            REQUIRE(line != nullptr);
            CHECK(on_anchor(line->p1));
            CHECK(on_anchor(line->p2));
        }
    }
}

TEST_CASE("one cell never emits duplicate lines") {
    Scene scene = scene_of("\\Qcircuit { & \\ctrl{1} \\qw \\\\ & \\targ \\qw }");
    std::multiset<std::string> seen;
    for (const auto &item : scene.items) {
        if (const auto *line = std::get_if<LinePrim>(&item.primitive)) {
            char buf[128];
            std::snprintf(buf, sizeof(buf), "%.9f,%.9f,%.9f,%.9f,%d", line->p1.x, line->p1.y,
                          line->p2.x, line->p2.y, static_cast<int>(line->style));
            seen.insert(buf);
        }
    }
    for (const auto &key : seen) {
        CHECK(seen.count(key) == 1);
    }
}

TEST_CASE("zero-length wires emit nothing") {
    Scene scene = scene_of("\\Qcircuit { \\qw[0] & \\qwx[0] }");
    CHECK(scene.items.empty());
}

TEST_CASE("multigate box covers all spanned anchors") {
    Scene scene = scene_of(
        "\\Qcircuit { & \\multigate{1}{U} & \\qw \\\\ & \\ghost{U} & \\qw }");
    auto boxes = items_of<PathBoxPrim>(scene, kLayerGlyph);
    REQUIRE(boxes.size() == 1);
    Rect bounds = primitive_bounds(*boxes.front());
    auto result = parse("\\Qcircuit { & \\multigate{1}{U} & \\qw \\\\ & \\ghost{U} & \\qw }");
    GridGeometry grid = grid_geometry(*result.ast, kStyle);
    for (std::size_t r = 0; r < 2; ++r) {
        CHECK(grid.col_x[1] >= bounds.left);
        CHECK(grid.col_x[1] <= bounds.right);
        CHECK(grid.row_y[r] >= bounds.top);
        CHECK(grid.row_y[r] <= bounds.bottom);
    }
    // Box spans the full height of both rows.
    CHECK(near(bounds.top, grid.row_y[0] - grid.row_height[0] / 2));
    CHECK(near(bounds.bottom, grid.row_y[1] + grid.row_height[1] / 2));
    // Label sits at the midpoint between the two anchors.
    auto labels = items_of<TextRunPrim>(scene, kLayerBoxLabel);
    REQUIRE(labels.size() == 1);
    CHECK(near(labels[0]->anchor.y, (grid.row_y[0] + grid.row_y[1]) / 2));
}

TEST_CASE("gategroup frame contains its corner anchors inflated by pad") {
    const char *source =
        "\\Qcircuit { & \\gate{H} & \\qw \\\\ & \\gate{X} & \\qw "
        "\\gategroup{1}{2}{2}{2}{.7em}{--} }";
    Scene scene = scene_of(source);
    auto frame_lines = items_of<LinePrim>(scene, kLayerGroupFrame);
    REQUIRE(frame_lines.size() == 4);
    for (const auto *line : frame_lines) {
        CHECK(line->style == LineStyle::Dashed);
    }
    Rect frame = primitive_bounds(*frame_lines[0]);
    for (std::size_t i = 1; i < frame_lines.size(); ++i) {
        Rect r = primitive_bounds(*frame_lines[i]);
        frame.left = std::min(frame.left, r.left);
        frame.top = std::min(frame.top, r.top);
        frame.right = std::max(frame.right, r.right);
        frame.bottom = std::max(frame.bottom, r.bottom);
    }
    auto result = parse(source);
    GridGeometry grid = grid_geometry(*result.ast, kStyle);
    Extent h = measure_cell(result.ast->rows[0][1], kStyle);
    CHECK(near(frame.left, grid.col_x[1] - h.width / 2 - 0.7));
    CHECK(near(frame.top, grid.row_y[0] - h.height / 2 - 0.7));
    CHECK(near(frame.bottom, grid.row_y[1] + h.height / 2 + 0.7));
}

TEST_CASE("meter glyph geometry") {
    Scene scene = scene_of("\\Qcircuit { & \\meter }");
    auto meters = items_of<MeterGlyphPrim>(scene, kLayerGlyph);
    REQUIRE(meters.size() == 1);
    const MeterGlyphPrim &m = *meters[0];
    CHECK(m.radius == kStyle.meter_radius);
    // Needle starts 0.4em below the arc top and rises (+0.5, -0.9).
    double arc_top = m.center.y - m.radius;
    CHECK(near(m.needle_from.y, arc_top + 0.4));
    CHECK(near(m.needle_to.x, m.needle_from.x + 0.5));
    CHECK(near(m.needle_to.y, m.needle_from.y - 0.9));
}

TEST_CASE("stick text escapes the grid and extends the bounds") {
    // LStick label of three characters: text width 1.8em, right edge
    // 0.5em left of the anchor at x = 0.
    CircuitAst ast;
    ast.rows = {{Cell{{elem::lstick(normalize_label("abc"))}, {}}}};
    GridGeometry grid = grid_geometry(ast, kStyle);
    Scene scene = plan_scene(ast, grid, kStyle);
    CHECK(near(grid.col_x[0], 0.0));
    CHECK(near(scene.bounds.left, -0.5 - 1.8));
}

TEST_CASE("bounding box of a single disc") {
    Scene scene;
    scene.items.push_back(SceneItem{2, DiscPrim{{1.0, 1.0}, 0.15}});
    Rect rect = bounding_box(scene);
    CHECK(near(rect.left, 0.85));
    CHECK(near(rect.top, 0.85));
    CHECK(near(rect.right, 1.15));
    CHECK(near(rect.bottom, 1.15));
}

TEST_CASE("layers are ordered and planning is deterministic") {
    const char *source =
        "\\Qcircuit { \\lstick{q} & \\ctrl{1} & \\meter \\gategroup{1}{2}{2}{3}{.5em}{-} \\\\ "
        "\\lstick{r} & \\targ & \\qw }";
    Scene first = scene_of(source);
    Scene second = scene_of(source);
    CHECK(render_scene_text(first) == render_scene_text(second));
    for (std::size_t i = 1; i < first.items.size(); ++i) {
        CHECK(first.items[i - 1].layer <= first.items[i].layer);
    }
}

TEST_CASE("brace frames become brace primitives") {
    Scene scene = scene_of(
        "\\Qcircuit { & \\gate{H} \\gategroup{1}{2}{2}{2}{.5em}{\\{} \\\\ & \\gate{X} }");
    auto braces = items_of<BracePrim>(scene, kLayerGroupFrame);
    REQUIRE(braces.size() == 1);
    CHECK(braces[0]->side == BraceSide::Left);
    CHECK(braces[0]->amplitude == kStyle.brace_amplitude);
    CHECK(braces[0]->from.x == braces[0]->to.x);
    CHECK(braces[0]->from.y < braces[0]->to.y);
    // Amplitude widens the bounds to the left of the frame edge.
    Rect bounds = primitive_bounds(*braces[0]);
    CHECK(near(bounds.left, braces[0]->from.x - 0.5));
    CHECK(items_of<LinePrim>(scene, kLayerGroupFrame).empty());
}

TEST_CASE("swap cross and open control") {
    Scene scene = scene_of("\\Qcircuit { & \\ctrlo{1} \\\\ & \\qswap }");
    auto circles = items_of<CircleOutlinePrim>(scene, kLayerGlyph);
    REQUIRE(circles.size() == 1);
    CHECK(circles[0]->radius == kStyle.open_dot_radius);
    auto crosses = items_of<CrossPrim>(scene, kLayerGlyph);
    REQUIRE(crosses.size() == 1);
    CHECK(crosses[0]->arm == kStyle.swap_arm);
}
