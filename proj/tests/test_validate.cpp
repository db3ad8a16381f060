#include <doctest.h>

#include "qcir/parser.hpp"
#include "qcir/validate.hpp"

#include "support/ast_gen.hpp"

using namespace qcir;

namespace {

CircuitAst parsed(const char *source) {
    auto result = parse(source);
    REQUIRE(result.ok());
    return *result.ast;
}

}  // namespace

TEST_CASE("wire off the left edge of a 1x1 grid") {
    CircuitAst ast = parsed("\\Qcircuit { \\qw }");
    auto diags = validate(ast);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].severity == Severity::Error);
    CHECK(diags[0].code == "target-out-of-grid");
    CHECK(diags[0].message.find("column -1") != std::string::npos);
    REQUIRE(diags[0].cell.has_value());
    CHECK(*diags[0].cell == CellAddress{0, 0});
}

TEST_CASE("well-formed multigate span is silent") {
    CircuitAst ast;
    ast.rows = {{Cell{{elem::multi_gate(1, normalize_label("U"))}, {}}},
                {Cell{{elem::ghost(normalize_label("U"))}, {}}}};
    // Hand-built cells skip the parser, so no implicit wires are present.
    auto diags = validate(ast);
    CHECK(diags.empty());
}

TEST_CASE("uncovered multigate span warns at the uncovered cell") {
    CircuitAst ast;
    ast.rows = {{Cell{{elem::multi_gate(1, normalize_label("U"))}, {}}},
                {Cell{{elem::qw(0)}, {}}}};
    auto diags = validate(ast);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].severity == Severity::Warning);
    CHECK(diags[0].code == "multigate-span-uncovered");
    CHECK(diags[0].message == "multigate span not covered by ghost");
    REQUIRE(diags[0].cell.has_value());
    CHECK(*diags[0].cell == CellAddress{1, 0});
}

TEST_CASE("multigate span leaving the grid is an error") {
    CircuitAst ast;
    ast.rows = {{Cell{{elem::multi_gate(2, normalize_label("U"))}, {}}},
                {Cell{{elem::ghost(normalize_label("U"))}, {}}}};
    // Span 2 needs rows 1 and 2; only row 1 exists.
    ast.rows[1][0].elements.pop_back();
    auto diags = validate(ast);
    bool error = false;
    for (const auto &d : diags) {
        if (d.severity == Severity::Error && d.code == "target-out-of-grid") {
            error = true;
        }
    }
    CHECK(error);
}

TEST_CASE("gategroup rectangle checks") {
    CircuitAst good = parsed("\\Qcircuit { \\gategroup{1}{1}{2}{2}{.5em}{-} & \\qw \\\\ & \\qw }");
    CHECK(validate(good).empty());

    CircuitAst off = parsed("\\Qcircuit { \\gategroup{1}{1}{3}{2}{.5em}{-} & \\qw \\\\ & \\qw }");
    auto diags = validate(off);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == "gategroup-bounds");

    CircuitAst inverted =
        parsed("\\Qcircuit { & \\qw \\\\ \\gategroup{2}{1}{1}{2}{.5em}{-} & \\qw }");
    diags = validate(inverted);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == "gategroup-bounds");
}

TEST_CASE("ragged rows address the padded grid") {
    // Row 0 is shorter; a downward wire from row 1 column 2 may still
    // target it, and a rightward wire may use the padded column.
    CircuitAst ast = parsed("\\Qcircuit { \\qw[1] \\\\ & \\qw & \\qwx[-1] }");
    auto diags = validate(ast);
    CHECK(diags.empty());
}

TEST_CASE("empty circuit warns") {
    CircuitAst ast = parsed("\\Qcircuit { \\\\ }");
    auto diags = validate(ast);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].severity == Severity::Warning);
    CHECK(diags[0].code == "empty-circuit");
}

TEST_CASE("ctrl and link targets") {
    CircuitAst bad = parsed("\\Qcircuit { & \\ctrl{5} \\\\ & \\qw }");
    auto diags = validate(bad);
    REQUIRE(!diags.empty());
    CHECK(diags[0].code == "target-out-of-grid");

    CircuitAst bad_link = parsed("\\Qcircuit { \\link{-1}{1} & \\qw }");
    diags = validate(bad_link);
    REQUIRE(!diags.empty());
    CHECK(diags[0].code == "target-out-of-grid");
}

TEST_CASE("validate is pure and ordered") {
    CircuitAst ast = parsed("\\Qcircuit { \\qw & \\ctrl{9} \\\\ \\qwx[-5] & \\qw[3] }");
    auto first = validate(ast);
    auto second = validate(ast);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].code == second[i].code);
        CHECK(first[i].message == second[i].message);
        CHECK(first[i].cell == second[i].cell);
    }
    // Sorted by (row, col).
    for (std::size_t i = 1; i < first.size(); ++i) {
        auto a = *first[i - 1].cell;
        auto b = *first[i].cell;
        CHECK((a.row < b.row || (a.row == b.row && a.col <= b.col)));
    }
}

TEST_CASE("error-free random grids resolve every relative target") {
    testgen::Rng rng(5150);
    for (int i = 0; i < 120; ++i) {
        CircuitAst ast = testgen::random_valid_ast(rng);
        auto diags = validate(ast);
        bool errors = has_errors(diags);
        CHECK(!errors);
        if (errors) {
            continue;
        }
        // Brute-force re-check of every relative target.
        long long rows = static_cast<long long>(ast.row_count());
        long long cols = static_cast<long long>(ast.col_count());
        for (std::size_t r = 0; r < ast.rows.size(); ++r) {
            for (std::size_t c = 0; c < ast.rows[r].size(); ++c) {
                for (const auto &e : ast.rows[r][c].elements) {
                    long long rr = static_cast<long long>(r);
                    long long cc = static_cast<long long>(c);
                    switch (e.kind) {
                        case ElementKind::QWire:
                        case ElementKind::CWire:
                            CHECK(cc + e.dcol >= 0);
                            CHECK(cc + e.dcol < cols);
                            break;
                        case ElementKind::QWireX:
                        case ElementKind::CWireX:
                        case ElementKind::Ctrl:
                        case ElementKind::CtrlOpen:
                            CHECK(rr + e.drow >= 0);
                            CHECK(rr + e.drow < rows);
                            break;
                        case ElementKind::Link:
                            CHECK(rr + e.drow >= 0);
                            CHECK(rr + e.drow < rows);
                            CHECK(cc + e.dcol >= 0);
                            CHECK(cc + e.dcol < cols);
                            break;
                        default:
                            break;
                    }
                }
            }
        }
    }
}
