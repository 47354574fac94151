#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "nilsym/catalog.hpp"
#include "nilsym/deform.hpp"
#include "nilsym/symplectic.hpp"

using namespace nilsym;

TEST_CASE("cochain values are antisymmetric") {
    TwoCochain psi;
    psi.dim = 4;
    psi.add(1, 2, 3, rat(1, 2));
    Vec v = psi.value(2, 1);
    CHECK(v[2] == rat(-1, 2));
    CHECK(psi.value(1, 1) == Vec(4));
    CHECK_THROWS_AS(psi.add(2, 1, 3, 1), std::invalid_argument);
}

TEST_CASE("deformation report splits the Jacobiator by powers of t") {
    LieAlgebra g32(8, "g32");
    g32.add_constant(1, 2, 3, 1);
    g32.add_constant(1, 4, 5, 1);
    g32.add_constant(1, 6, 7, 1);
    SUBCASE("valid cocycle on even generators") {
        TwoCochain psi;
        psi.dim = 8;
        psi.add(2, 4, 7, 1);
        auto rep = validate_deformation(g32, psi);
        CHECK(rep.ok());
        LieAlgebra def = linear_deformation(g32, psi, rat(1, 3));
        CHECK(def.validate().ok);
        CHECK(def.bracket_basis(2, 4)[6] == rat(1, 3));
    }
    SUBCASE("cocycle condition failure is isolated in the t^1 coefficient") {
        LieAlgebra h34(4);   // h3 + A1
        h34.add_constant(1, 2, 3, 1);
        TwoCochain psi;
        psi.dim = 4;
        psi.add(3, 4, 1, 1);   // delta psi (X1,X2,X4) = psi(X4,[X1,X2]) = -X1
        auto rep = validate_deformation(h34, psi);
        CHECK(rep.base_jacobi);
        CHECK(!rep.cocycle_condition);
        CHECK(rep.integrability);
        CHECK_THROWS_AS(linear_deformation(h34, psi, 1), std::invalid_argument);
    }
}

TEST_CASE("family constructors expose exactly the allowed slots") {
    std::map<std::string, Rational> params{{"(2,4)->3", 1}};
    FamilyWarning warn;
    LieAlgebra member = family_algebra("C1_F832", params, &warn);
    CHECK(member.validate().ok);
    CHECK(member.dim() == 8);
    CHECK(member.bracket_basis(2, 4)[2] == 1);
    CHECK(warn.expected == CharSeq{{2, 2, 2, 1, 1}});
    CHECK(warn.charseq_matches_target);

    CHECK_THROWS_AS(family_algebra("C1_F832", {{"(1,2)->3", 1}}, nullptr),
                    std::invalid_argument);
    CHECK_THROWS_AS(family_algebra("no_such_family", {}, nullptr), std::invalid_argument);

    // C2_F824 carries the fixed bracket [X2,X4] = X8
    LieAlgebra c2 = family_algebra("C2_F824", {{"(2,6)->5", 2}});
    CHECK(c2.bracket_basis(2, 4)[7] == 1);
    CHECK(c2.bracket_basis(2, 6)[4] == 2);

    // general family at p = 4 reduces to the dim-8 base chain
    LieAlgebra gen = family_algebra("C1_general", {}, &warn, 4);
    CHECK(gen.dim() == 8);
    CHECK(gen.bracket_basis(1, 6)[6] == 1);
    CHECK(warn.expected == CharSeq{{2, 2, 2, 1, 1}});
}

TEST_CASE("degenerate members are flagged against the target sequence") {
    FamilyWarning warn;
    family_algebra("C1_F824", {}, &warn);   // the base point, all parameters zero
    CHECK(warn.expected == CharSeq{{2, 2, 1, 1, 1, 1}});
    CHECK(warn.charseq_matches_target);     // the base g24 already hits the target
}

TEST_CASE("contraction with nonnegative exponents has a limit") {
    LieAlgebra h3(3);
    h3.add_constant(1, 2, 3, 1);
    // exponent w1 + w2 - w3 = 0 + 0 - 1 < 0: no limit
    auto no = contract(h3, {0, 0, 1});
    CHECK(!no.limit);
    REQUIRE(no.offending.size() == 1);
    CHECK(no.offending[0] == std::array<int, 3>{1, 2, 3});
    // weights (1,1,1): exponent 1 > 0, bracket dies, abelian limit
    auto ab = contract(h3, {1, 1, 1});
    REQUIRE(ab.limit);
    CHECK(ab.limit->constants().empty());
    // weights (1,1,2): exponent 0, bracket survives verbatim
    auto same = contract(h3, {1, 1, 2});
    REQUIRE(same.limit);
    CHECK(same.limit->bracket_basis(1, 2)[2] == 1);
    CHECK_THROWS_AS(contract(h3, {1, 1}), std::invalid_argument);
}

TEST_CASE("the six-dimensional filiform contraction") {
    LieAlgebra fil = catalog_named("filiform6")->algebra;
    auto res = contract(fil, {1, 1, 1, 1, 1, 2});
    REQUIRE(res.limit);
    const LieAlgebra& lim = *res.limit;
    // surviving brackets: [X1,X5] = X6 and [X2,X4] = X6, i.e. h5 + A1
    CHECK(lim.bracket_basis(1, 5)[5] == 1);
    CHECK(lim.bracket_basis(2, 4)[5] == 1);
    CHECK(lim.bracket_basis(1, 2) == Vec(6));
    CHECK(lim.generators_count() == 5);
    auto [core, s] = lim.split_abelian_factor();
    CHECK(s == 1);
    CHECK(core.dim() == 5);
    CHECK(!decide_symplectic(lim).symplectic);
}

TEST_CASE("transport of symplectic forms through contraction") {
    PForm theta(6, 2);
    theta.add({1, 6}, 1);
    theta.add({2, 5}, 2);
    theta.add({3, 4}, -1);
    CHECK(!transport_symplectic(theta, {1, 1, 1, 1, 1, 2}));   // degrees 3,2,2
    PForm homog(6, 2);
    homog.add({1, 6}, 1);
    homog.add({2, 5}, 1);
    CHECK(transport_symplectic(homog, {1, 1, 1, 1, 2, 2}));    // both degree 3
}
