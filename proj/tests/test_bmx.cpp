#include <gtest/gtest.h>

#include "bmat/bmx.hpp"
#include "bmat/catalog.hpp"

using namespace bmat;

namespace {

ParseError parse_error(const std::string& text) {
    try {
        parse_bmx(text);
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "no error for:\n" << text;
    return ParseError(0, 0, "");
}

}  // namespace

TEST(Bmx, RoundTripsCatalog) {
    for (const char* k : {"F7", "PG32", "R12", "T12", "M11_21", "Delta6"}) {
        BinaryMatroid m = named(k);
        std::string text = emit_bmx(m);
        BinaryMatroid back = parse_bmx(text);
        EXPECT_TRUE(back.same_matroid(m)) << k;
        EXPECT_EQ(back.name, m.name);
        EXPECT_EQ(emit_bmx(back), text) << k;
    }
}

TEST(Bmx, NormalizesLayout) {
    std::string loose =
        "# comment\n\nname  tiny\nrank 2\nlabels a b c\n1 0 1\n\n0 1   1\n";
    BinaryMatroid m = parse_bmx(loose);
    EXPECT_EQ(m.size(), 3);
    EXPECT_EQ(m.rank(), 2);
    EXPECT_EQ(emit_bmx(m), "name tiny\nrank 2\nlabels a b c\n101\n011\n");
    EXPECT_EQ(emit_bmx(parse_bmx(emit_bmx(m))), emit_bmx(m));
    // Name is optional.
    EXPECT_EQ(emit_bmx(parse_bmx("rank 1\nlabels x y\n11\n")), "rank 1\nlabels x y\n11\n");
}

TEST(Bmx, CatalogShowPg32) {
    std::string text = emit_bmx(named("PG32"));
    BinaryMatroid m = parse_bmx(text);
    EXPECT_EQ(m.rank(), 4);
    EXPECT_EQ(m.size(), 15);
}

TEST(Bmx, DiagnosesLineAndColumn) {
    auto e = parse_error("name x\nrank four\nlabels a b\n11\n");
    EXPECT_EQ(e.line, 2);
    EXPECT_EQ(e.column, 6);
    e = parse_error("rank 2\nlabels a b c\n101\n0x1\n");
    EXPECT_EQ(e.line, 4);
    EXPECT_EQ(e.column, 2);
    e = parse_error("rank 2\nlabels a b c\n101\n01\n");
    EXPECT_EQ(e.line, 4);
    e = parse_error("rank 2\nlabels a b c\n101\n");
    EXPECT_EQ(e.line, 4);
    e = parse_error("rank 1\nlabels a a\n11\n");
    EXPECT_EQ(e.line, 2);
    e = parse_error("rank 2\nlabels a b\n11\n11\n");  // dependent rows
    EXPECT_EQ(e.line, 1);
    e = parse_error("labels a b\n11\n");
    EXPECT_EQ(e.line, 1);
    e = parse_error("rank 1\nlabels a b\n11\n10\n");
    EXPECT_EQ(e.line, 4);
}
