#include "commands.hpp"

#include <gtest/gtest.h>

using namespace taft;
using namespace taft::cli;

TEST(ParseElement, Forms) {
    const TaftParams p(4, 2);
    EXPECT_EQ(parse_element(p, "M(2,0)"), GreenElement::basis(p, 2, 0));
    EXPECT_EQ(parse_element(p, " 2*M(1,0) - M(2,3) "), GreenElement::basis(p, 1, 0, 2) - GreenElement::basis(p, 2, 3));
    EXPECT_EQ(parse_element(p, "3M(1,1)+M(1,-1)"), GreenElement::basis(p, 1, 1, 3) + GreenElement::basis(p, 1, 3));
    EXPECT_EQ(parse_element(p, "-2"), GreenElement::basis(p, 1, 0, -2));
    EXPECT_EQ(parse_element(p, "M(2,0) + 1"), GreenElement::basis(p, 2, 0) + GreenElement::unit(p));
    for (const char* bad : {"", "M(2,0", "M(3,0)", "M(2,)", "2*", "M(1,0) M(1,1)", "x", "2**M(1,0)"})
        EXPECT_THROW(parse_element(p, bad), UsageError) << bad;
}

TEST(Commands, Present) {
    const OutputRecord r = cmd_present(make_params(4, 2));
    EXPECT_EQ(r.payload["green"]["relations"][0], "y^4 - 1");
    const BivarPoly z = BivarPoly::z();
    const BivarPoly y2 = BivarPoly::monomial(1, 2, 0);
    EXPECT_EQ(r.payload["green"]["relations"][1], ((z - y2 - BivarPoly::constant(1)) * z).str());
    EXPECT_EQ(r.payload["projective"]["relations"][1], (z * z - (BivarPoly::constant(1) + y2) * z).str());
    EXPECT_EQ(r.payload["stable"]["relations"][1], "z");
    EXPECT_TRUE(r.all_pass());
    EXPECT_THROW(make_params(6, 4), UsageError);
    EXPECT_THROW(make_params(1, 1), UsageError);
}

TEST(Commands, Mult) {
    auto r = cmd_mult(make_params(4, 2), "M(2,0)", "M(2,0)", "both");
    EXPECT_EQ(r.payload["product"], "M(2,0) + M(2,2)");
    EXPECT_TRUE(r.all_pass());
    r = cmd_mult(make_params(6, 3), "M(1,1)", "M(3,2)", "oracle");
    EXPECT_EQ(r.payload["product"], "M(3,3)");
    r = cmd_mult(make_params(6, 3), "M(1,0)", "2*M(2,1) - M(3,4)", "poly");
    EXPECT_EQ(r.payload["product"], "2*M(2,1) - M(3,4)");
    EXPECT_THROW(cmd_mult(make_params(4, 2), "M(1,0)-M(2,0)", "M(1,0)", "oracle"), UsageError);
    EXPECT_THROW(cmd_mult(make_params(4, 2), "M(1,0)", "M(1,0)", "fast"), UsageError);
}

TEST(Commands, Table) {
    const auto r = cmd_table(make_params(4, 2));
    const auto& cells = r.payload["cells"];
    ASSERT_EQ(cells.size(), 64u);
    EXPECT_TRUE(r.all_pass());
    // first row is M(1,0) times the basis, in order
    const auto basis = basis_indices(TaftParams(4, 2));
    for (std::size_t k = 0; k < basis.size(); ++k) EXPECT_EQ(cells[k]["product"], basis[k].str());
    for (const auto& c : cells)
        if (c["lhs"] == "M(2,0)" && c["rhs"] == "M(2,0)") EXPECT_EQ(c["product"], "M(2,0) + M(2,2)");
    EXPECT_EQ(r.csv_rows.size(), 64u);
    EXPECT_EQ(r.to_csv().substr(0, 23), "lhs,rhs,product,agree\n\"");
}

TEST(Commands, RadicalAndSpectrum) {
    EXPECT_EQ(cmd_radical(make_params(4, 2)).payload["rank"], 2);
    EXPECT_EQ(cmd_radical(make_params(6, 3)).payload["rank"], 4);
    EXPECT_TRUE(cmd_radical(make_params(8, 4)).all_pass());
    EXPECT_EQ(cmd_spectrum(make_params(4, 2)).payload["count"], 6);
    const auto s = cmd_spectrum(make_params(6, 3));
    EXPECT_EQ(s.payload["irreducibles"], 14);
    EXPECT_EQ(s.payload["block_census"]["total"], 18);
    EXPECT_EQ(s.payload["block_census"]["dim1_blocks"], 10);
    EXPECT_EQ(s.payload["block_census"]["dim2_blocks"], 4);
    EXPECT_TRUE(s.all_pass());
}

TEST(Commands, OutputIsDeterministic) {
    EXPECT_EQ(cmd_spectrum(make_params(6, 3)).to_json(), cmd_spectrum(make_params(6, 3)).to_json());
    const std::string text = cmd_present(make_params(4, 2)).to_json();
    EXPECT_LT(text.find("\"checks\""), text.find("\"meta\""));
    EXPECT_LT(text.find("\"meta\""), text.find("\"payload\""));
}

TEST(Commands, SelfcheckAndFaultInjection) {
    const auto ok = cmd_selfcheck({TaftParams(4, 2)}, false);
    EXPECT_TRUE(ok.all_pass());
    EXPECT_EQ(ok.payload["summary"]["failed"], 0);
    // F_2 = z for either sign, so the corrupted rule needs d >= 3 to show
    EXPECT_TRUE(cmd_selfcheck({TaftParams(4, 2)}, true).all_pass());
    const auto bad = cmd_selfcheck({TaftParams(6, 3)}, true);
    EXPECT_FALSE(bad.all_pass());
    EXPECT_FALSE(bad.payload["criteria"][0]["pass"].get<bool>());
    EXPECT_THROW(cmd_selfcheck({}, false), UsageError);
}

TEST(Commands, GridParsing) {
    const auto g = parse_grid("4:2,6:3,6:4");
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g[1], TaftParams(6, 3));
    EXPECT_THROW(parse_grid("4-2"), UsageError);
    EXPECT_EQ(product_grid({4, 6}, {2, 3}).size(), 3u);
    EXPECT_TRUE(product_grid({6}, {4}).empty());
}
