#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "qcir/style.hpp"

using namespace qcir;

TEST_CASE("empty style keeps the macro-derived defaults") {
    auto result = parse_style("");
    REQUIRE(result.config.has_value());
    const StyleConfig &c = *result.config;
    CHECK(c.gate_pad == 0.6);
    CHECK(c.multi_pad_x == 1.0);
    CHECK(c.multi_pad_y == 0.9);
    CHECK(c.measure_pad == 0.9);
    CHECK(c.meter_radius == 1.1);
    CHECK(c.stick_offset == 0.5);
    CHECK(c.open_dot_radius == 0.295);
    CHECK(c.px_per_em == 16.0);
    CHECK(c.margin == 0.5);
    CHECK(result.warnings.empty());
}

TEST_CASE("single override leaves the rest at defaults") {
    auto result = parse_style("pxPerEm=20\n");
    REQUIRE(result.config.has_value());
    CHECK(result.config->px_per_em == 20.0);
    CHECK(result.config->gate_pad == 0.6);
}

TEST_CASE("bad numeric value is a hard error") {
    auto result = parse_style("meterRadius=banana\n");
    CHECK(!result.config.has_value());
    CHECK(result.error.find("banana") != std::string::npos);
}

TEST_CASE("unknown keys warn") {
    auto result = parse_style("frobnicate=1\n");
    REQUIRE(result.config.has_value());
    REQUIRE(result.warnings.size() == 1);
    CHECK(result.warnings[0].find("frobnicate") != std::string::npos);
}

TEST_CASE("comments, blanks and em suffixes are accepted") {
    auto result = parse_style("# comment\n\ngatePad = 0.7em\nfontFamily = monospace\n");
    REQUIRE(result.config.has_value());
    CHECK(result.config->gate_pad == 0.7);
    CHECK(result.config->font_family == "monospace");
}

TEST_CASE("background values") {
    CHECK(parse_style("background=white\n").config->background == Background::White);
    CHECK(parse_style("background=none\n").config->background == Background::None);
    CHECK(!parse_style("background=pink\n").config.has_value());
}

TEST_CASE("render invariants are enforced") {
    CHECK(!parse_style("pxPerEm=0\n").config.has_value());
    CHECK(!parse_style("pxPerEm=-4\n").config.has_value());
    CHECK(!parse_style("margin=-1\n").config.has_value());
    CHECK(parse_style("margin=0\n").config.has_value());
}

TEST_CASE("unreadable file reports an error") {
    auto result = load_style("/nonexistent/qcir-style.cfg");
    CHECK(!result.config.has_value());
    CHECK(!result.error.empty());
}

TEST_CASE("load_style reads from disk") {
    std::string path = "qcir_style_test.tmp";
    {
        std::ofstream out(path);
        out << "swapArm=0.4\n";
    }
    auto result = load_style(path);
    std::remove(path.c_str());
    REQUIRE(result.config.has_value());
    CHECK(result.config->swap_arm == 0.4);
}
