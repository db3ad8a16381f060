#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcir {

enum class Background {
    None,
    White,
};

// Layout and rendering knobs. Geometry defaults come from the macro
// constants; all lengths are in em unless noted.
struct StyleConfig {
    // Element geometry.
    double gate_pad = 0.6;          // box padding per side around gate labels
    double multi_pad_x = 1.0;       // multigate/ghost horizontal padding per side
    double multi_pad_y = 0.9;       // multigate/ghost vertical padding per side
    double measure_pad = 0.9;       // measure frame padding and corner radius
    double meter_radius = 1.1;      // meter half-disc radius
    double stick_offset = 0.5;      // stick label distance from the anchor
    double open_dot_radius = 0.295; // open control dot (0.59em across)
    double ctrl_radius = 0.15;      // filled control dot
    double targ_radius = 0.4;       // oplus circle
    double targ_frame = 0.05;       // extra frame allowance per side on targ
    double swap_arm = 0.3;          // swap cross half-arm
    double node_pad = 0.3;          // node circle padding per side
    double min_row_height = 1.2;    // floor so empty rows still separate wires
    double double_gap = 0.15;       // gap between the two strokes of a classical wire
    double brace_amplitude = 0.5;   // gategroup brace depth

    // Text metrics (fixed table; no font access).
    double char_width = 0.6;        // per code point at size 1em
    double small_char_width = 0.45; // per code point in super/subscript runs
    double line_height = 0.9;
    double small_scale = 0.7;       // super/subscript font scale

    // Rendering.
    double px_per_em = 16.0;
    double stroke_width = 0.07;     // em
    std::string font_family = "serif";
    Background background = Background::None;
    double margin = 0.5;            // em, added around the scene bounds
};

struct StyleLoadResult {
    std::optional<StyleConfig> config;  // set unless a hard error occurred
    std::vector<std::string> warnings;  // unknown keys
    std::string error;                  // unreadable file or bad value
};

// key=value per line; '#' starts a comment; unknown keys warn; missing
// keys keep their defaults.
StyleLoadResult parse_style(std::string_view text, const StyleConfig &base = StyleConfig{});
StyleLoadResult load_style(const std::string &path, const StyleConfig &base = StyleConfig{});

}  // namespace qcir
