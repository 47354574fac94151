#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "nilsym/catalog.hpp"
#include "nilsym/io.hpp"

using namespace nilsym;

TEST_CASE("parse the minimal heisenberg file") {
    LieAlgebra l = parse_algebra("dim 3\n[1,2] = 3:1\n");
    CHECK(l.dim() == 3);
    CHECK(l.bracket_basis(1, 2)[2] == 1);
    CHECK(l.validate().ok);
}

TEST_CASE("parse names, comments, rationals, multiple targets") {
    std::string text =
        "# a structure constant table\n"
        "algebra demo\n"
        "dim 4\n"
        "[1,2] = 3:1/2, 4:-2   # two targets\n"
        "\n"
        "[1,3] = 4:7/3\n";
    LieAlgebra l = parse_algebra(text);
    CHECK(l.name() == "demo");
    CHECK(l.bracket_basis(1, 2)[2] == rat(1, 2));
    CHECK(l.bracket_basis(1, 2)[3] == -2);
    CHECK(l.bracket_basis(1, 3)[3] == rat(7, 3));
}

TEST_CASE("parse errors carry line positions") {
    CHECK_THROWS_AS(parse_algebra("[1,2] = 3:1\n"), ParseError);          // before dim
    CHECK_THROWS_AS(parse_algebra("dim 3\n[2,1] = 3:1\n"), ParseError);   // i >= j
    CHECK_THROWS_AS(parse_algebra("dim 3\n[1,2] = 9:1\n"), ParseError);   // out of range
    CHECK_THROWS_AS(parse_algebra("dim 3\n[1,2] = 3:x\n"), ParseError);   // bad rational
    CHECK_THROWS_AS(parse_algebra("dim 3\ndim 3\n"), ParseError);         // duplicate dim
    CHECK_THROWS_AS(parse_algebra(""), ParseError);                       // missing dim
    try {
        parse_algebra("dim 3\n[2,1] = 3:1\n");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("solvable non-nilpotent input parses and validates") {
    LieAlgebra l = parse_algebra("dim 2\n[1,2] = 1:1/2\n");
    CHECK(l.validate().ok);
    CHECK(!l.nilindex());
}

TEST_CASE("round trip is canonical") {
    for (const char* name : {"k8", "h82_rigid", "filiform6"}) {
        LieAlgebra l = catalog_named(name)->algebra;
        std::string text = serialize_algebra(l);
        LieAlgebra back = parse_algebra(text);
        CHECK(back.constants() == l.constants());
        CHECK(back.name() == l.name());
        CHECK(serialize_algebra(back) == text);
    }
    // comment stripping and reordering normalize to the same bytes
    std::string messy = "dim 4\n[1,3] = 4:1 # late\n[1,2] = 4:1, 3:2\n";
    std::string canon = serialize_algebra(parse_algebra(messy));
    CHECK(canon == "dim 4\n[1,2] = 3:2, 4:1\n[1,3] = 4:1\n");
    CHECK(serialize_algebra(parse_algebra(canon)) == canon);
}

TEST_CASE("form entry parsing") {
    auto entries = parse_form_entries("1,2:3; 3,4:-1/2");
    REQUIRE(entries.size() == 2);
    CHECK(std::get<0>(entries[1]) == 3);
    CHECK(std::get<2>(entries[1]) == rat(-1, 2));
    auto with_newlines = parse_form_entries("1,2:1\n3,4:1");
    CHECK(with_newlines.size() == 2);
    CHECK_THROWS_AS(parse_form_entries("1,2"), ParseError);
}

TEST_CASE("matrix parsing") {
    Mat m = parse_matrix("1 2\n-1/2 0  # comment\n");
    CHECK(m.rows() == 2);
    CHECK(m(1, 0) == rat(-1, 2));
    CHECK_THROWS_AS(parse_matrix(""), ParseError);
    CHECK_THROWS_AS(parse_matrix("1 2\n3\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("1 z\n"), ParseError);
}
