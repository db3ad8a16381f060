#include <doctest.h>

#include <random>

#include "qcir/parser.hpp"
#include "qcir/printer.hpp"

using namespace qcir;

TEST_CASE("minimal circuit with default spacing") {
    auto result = parse("\\Qcircuit { \\qw }");
    REQUIRE(result.ok());
    const CircuitAst &ast = *result.ast;
    REQUIRE(ast.rows.size() == 1);
    REQUIRE(ast.rows[0].size() == 1);
    REQUIRE(ast.rows[0][0].elements.size() == 1);
    CHECK(ast.rows[0][0].elements[0] == elem::qw(-1));
    CHECK(ast.spacing.col_sep == Dim::em(1.0));
    CHECK(ast.spacing.row_sep == Dim::em(1.0));
    CHECK(ast.spacing.object_margin == Dim::em(0.05));
}

TEST_CASE("spacing options and empty leading cell") {
    auto result = parse("\\Qcircuit @C=1em @R=.7em { & \\gate{H} & \\qw \\\\ }");
    REQUIRE(result.ok());
    const CircuitAst &ast = *result.ast;
    REQUIRE(ast.rows.size() == 1);
    REQUIRE(ast.rows[0].size() == 3);
    CHECK(ast.rows[0][0].elements.empty());
    REQUIRE(ast.rows[0][1].elements.size() == 1);
    CHECK(ast.rows[0][1].elements[0].kind == ElementKind::Gate);
    CHECK(ast.rows[0][1].elements[0].label.raw == "H");
    CHECK(ast.rows[0][2].elements[0] == elem::qw(-1));
    CHECK(ast.spacing.col_sep == Dim::em(1.0));
    CHECK(ast.spacing.row_sep == (Dim{0.7, Unit::Em}));
}

TEST_CASE("implicit trailing wires are attached and deduplicated") {
    auto result = parse("\\Qcircuit { \\ctrl{1} \\qw \\\\ \\targ \\qw }");
    REQUIRE(result.ok());
    const CircuitAst &ast = *result.ast;
    REQUIRE(ast.rows.size() == 2);
    REQUIRE(ast.rows[0][0].elements.size() == 2);
    CHECK(ast.rows[0][0].elements[0] == elem::ctrl(1));
    CHECK(ast.rows[0][0].elements[1] == elem::qw(-1));
    REQUIRE(ast.rows[1][0].elements.size() == 2);
    CHECK(ast.rows[1][0].elements[0] == elem::targ());
    CHECK(ast.rows[1][0].elements[1] == elem::qw(-1));
}

TEST_CASE("object margin from optional argument and @*=") {
    auto via_opt = parse("\\Qcircuit[.1em] { \\qw }");
    REQUIRE(via_opt.ok());
    CHECK(via_opt.ast->spacing.object_margin == (Dim{0.1, Unit::Em}));

    auto via_star = parse("\\Qcircuit @*=<.2em> { \\qw }");
    REQUIRE(via_star.ok());
    CHECK(via_star.ast->spacing.object_margin == (Dim{0.2, Unit::Em}));
}

TEST_CASE("equalize options warn and are recorded") {
    auto result = parse("\\Qcircuit @! { \\qw }");
    REQUIRE(result.ok());
    CHECK(result.ast->spacing.equalize_all);
    REQUIRE(result.diagnostics.size() == 1);
    CHECK(result.diagnostics[0].severity == Severity::Warning);
    CHECK(result.diagnostics[0].code == "spacing-ignored");
}

TEST_CASE("trailing row break adds no row") {
    auto with_break = parse("\\Qcircuit { \\qw \\\\ }");
    REQUIRE(with_break.ok());
    CHECK(with_break.ast->rows.size() == 1);

    auto empty = parse("\\Qcircuit { \\\\ }");
    REQUIRE(empty.ok());
    REQUIRE(empty.ast->rows.size() == 1);
    CHECK(empty.ast->rows[0].size() == 1);
    CHECK(empty.ast->rows[0][0].elements.empty());
}

TEST_CASE("argument arities") {
    auto result = parse(
        "\\Qcircuit { \\ctrl{-1} & \\multigate{2}{U} & \\gategroup{1}{2}{3}{4}{.7em}{--} & "
        "\\node[s]{x} & \\link{1}{2} & \\qwx[2] }");
    REQUIRE(result.ok());
    const auto &cells = result.ast->rows[0];
    CHECK(cells[0].elements[0] == elem::ctrl(-1));
    CHECK(cells[1].elements[0].kind == ElementKind::MultiGate);
    CHECK(cells[1].elements[0].span == 2);
    const Element &group = cells[2].elements[0];
    CHECK(group.row1 == 1);
    CHECK(group.col1 == 2);
    CHECK(group.row2 == 3);
    CHECK(group.col2 == 4);
    CHECK(group.pad == (Dim{0.7, Unit::Em}));
    CHECK(group.frame == FrameStyle::Dashed);
    const Element &node = cells[3].elements[0];
    REQUIRE(node.super.has_value());
    CHECK(node.super->raw == "s");
    CHECK(cells[4].elements[0] == elem::link(1, 2));
    CHECK(cells[5].elements[0] == elem::qwx(2));
}

TEST_CASE("qwx default offset") {
    auto result = parse("\\Qcircuit { \\qwx }");
    REQUIRE(result.ok());
    CHECK(result.ast->rows[0][0].elements[0] == elem::qwx(-1));
}

TEST_CASE("unknown command is an error in strict mode") {
    auto result = parse("\\Qcircuit { \\bogus }");
    CHECK(!result.ok());
    REQUIRE(!result.diagnostics.empty());
    CHECK(result.diagnostics[0].code == "unknown-command");
    CHECK(result.diagnostics[0].message.find("bogus") != std::string::npos);
    REQUIRE(result.diagnostics[0].cell.has_value());
    CHECK(*result.diagnostics[0].cell == CellAddress{0, 0});
    CHECK(result.diagnostics[0].source_span.has_value());
}

TEST_CASE("lenient mode skips unknown commands with a warning") {
    auto result = parse("\\Qcircuit { \\bogus \\qw }", ParseMode::Lenient);
    REQUIRE(result.ok());
    REQUIRE(result.diagnostics.size() == 1);
    CHECK(result.diagnostics[0].severity == Severity::Warning);
    REQUIRE(result.ast->rows[0][0].elements.size() == 1);
    CHECK(result.ast->rows[0][0].elements[0] == elem::qw(-1));
}

TEST_CASE("missing required argument") {
    auto result = parse("\\Qcircuit { \\gate }");
    CHECK(!result.ok());
    CHECK(result.diagnostics[0].code == "missing-argument");
}

TEST_CASE("ctrl offset must be nonzero, spans must be positive") {
    auto zero = parse("\\Qcircuit { & \\ctrl{0} }");
    CHECK(!zero.ok());
    CHECK(zero.diagnostics[0].code == "bad-offset");

    auto span0 = parse("\\Qcircuit { \\multigate{0}{U} }");
    CHECK(!span0.ok());
    CHECK(span0.diagnostics[0].code == "bad-span");
    CHECK(span0.diagnostics[0].message.find("\\gate") != std::string::npos);

    auto link0 = parse("\\Qcircuit { \\link{0}{0} }");
    CHECK(!link0.ok());
    CHECK(link0.diagnostics[0].code == "bad-offset");
}

TEST_CASE("non-integer argument where integer required") {
    auto result = parse("\\Qcircuit { \\ctrl{x} }");
    CHECK(!result.ok());
    CHECK(result.diagnostics[0].code == "bad-integer");
}

TEST_CASE("unknown frame style") {
    auto result = parse("\\Qcircuit { \\gategroup{1}{1}{1}{1}{.5em}{~} }");
    CHECK(!result.ok());
    CHECK(result.diagnostics[0].code == "bad-frame-style");
}

TEST_CASE("every parse error carries a byte offset") {
    const char *bad_inputs[] = {
        "\\Qcircuit { \\bogus }",
        "\\Qcircuit { \\gate }",
        "\\Qcircuit { \\ctrl{x} }",
        "\\gate{H}",
        "\\Qcircuit { \\qw",
        "\\Qcircuit @C=nope { \\qw }",
    };
    for (const char *input : bad_inputs) {
        CAPTURE(input);
        auto result = parse(input);
        REQUIRE(!result.ok());
        bool any_offset = false;
        for (const auto &d : result.diagnostics) {
            if (d.severity == Severity::Error && d.source_span.has_value()) {
                any_offset = true;
            }
        }
        CHECK(any_offset);
    }
}

TEST_CASE("comments are stripped before parsing") {
    auto result = parse("\\Qcircuit { % first\n \\qw % second\n }");
    REQUIRE(result.ok());
    CHECK(result.ast->rows[0][0].elements[0] == elem::qw(-1));
}

TEST_CASE("parse_dimension forms") {
    CHECK(parse_dimension("1em") == Dim{1.0, Unit::Em});
    CHECK(parse_dimension(".7em") == Dim{0.7, Unit::Em});
    CHECK(parse_dimension("-0.5em") == Dim{-0.5, Unit::Em});
    CHECK(parse_dimension("2ex") == Dim{2.0, Unit::Ex});
    CHECK(parse_dimension("10pt") == Dim{10.0, Unit::Pt});
    CHECK(!parse_dimension("1").has_value());
    CHECK(!parse_dimension("em").has_value());
    CHECK(!parse_dimension("1cm").has_value());
    CHECK(!parse_dimension("1.2.3em").has_value());
    CHECK(!parse_dimension("").has_value());
}

TEST_CASE("unit conversion scale") {
    CHECK(Dim{10.0, Unit::Pt}.to_em() == doctest::Approx(1.0));
    CHECK(Dim{2.0, Unit::Ex}.to_em() == doctest::Approx(1.0));
}

TEST_CASE("stray text is rejected in strict mode") {
    auto result = parse("\\Qcircuit { hello }");
    CHECK(!result.ok());
    CHECK(result.diagnostics[0].code == "unexpected-token");
}

TEST_CASE("junk input never crashes the parser") {
    std::mt19937 rng(0xFADE);
    const std::string charset = "\\{}[]&@%$^_ \tqwertyQcircuit0123456789.-=<>!*()\n";
    for (int i = 0; i < 5000; ++i) {
        std::string junk;
        std::size_t len = rng() % 64;
        for (std::size_t k = 0; k < len; ++k) {
            junk += charset[rng() % charset.size()];
        }
        auto result = parse(junk);
        if (!result.ok()) {
            CHECK(!result.diagnostics.empty());
        }
        auto lenient = parse(junk, ParseMode::Lenient);
        (void)lenient;
    }
}
