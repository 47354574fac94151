#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "nilsym/poly.hpp"

using namespace nilsym;

TEST_CASE("polynomial arithmetic") {
    ParamPoly x = ParamPoly::variable(2, 0);
    ParamPoly y = ParamPoly::variable(2, 1);
    ParamPoly p = (x + y) * (x - y);
    ParamPoly q = x * x - y * y;
    CHECK(p == q);
    CHECK(p.total_degree() == 2);
    CHECK((p - q).is_zero());
    CHECK(p.eval({3, 2}) == 5);
    CHECK(p.eval({rat(1, 2), rat(1, 3)}) == rat(1, 4) - rat(1, 9));
}

TEST_CASE("substitution keeps the variable count") {
    ParamPoly x = ParamPoly::variable(3, 0);
    ParamPoly y = ParamPoly::variable(3, 1);
    ParamPoly p = x * y + y * y + ParamPoly::constant(3, 7);
    ParamPoly at2 = p.substitute(1, 2);
    CHECK(at2 == x * Rational(2) + ParamPoly::constant(3, 11));
    CHECK(at2.substitute(0, -1).eval({0, 0, 0}) == 9);
}

TEST_CASE("symbolic pfaffian of the generic 4x4 skew matrix") {
    // variables: a=m01, b=m02, c=m03, d=m12, e=m13, f=m23
    PolyMat m(4, 6);
    int var = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            m(i, j) = ParamPoly::variable(6, var);
            m(j, i) = -ParamPoly::variable(6, var);
            ++var;
        }
    ParamPoly pf = symbolic_pfaffian(m, 6);
    // Pf = a f - b e + c d
    ParamPoly a = ParamPoly::variable(6, 0), b = ParamPoly::variable(6, 1),
              c = ParamPoly::variable(6, 2), d = ParamPoly::variable(6, 3),
              e = ParamPoly::variable(6, 4), f = ParamPoly::variable(6, 5);
    CHECK(pf == a * f - b * e + c * d);
}

TEST_CASE("symbolic pfaffian odd size is zero") {
    PolyMat m(3, 1);
    m(0, 1) = ParamPoly::variable(1, 0);
    m(1, 0) = -ParamPoly::variable(1, 0);
    CHECK(symbolic_pfaffian(m, 1).is_zero());
}

TEST_CASE("pfaffian of a block diagonal symplectic pattern") {
    PolyMat m(6, 3);
    for (int k = 0; k < 3; ++k) {
        m(2 * k, 2 * k + 1) = ParamPoly::variable(3, k);
        m(2 * k + 1, 2 * k) = -ParamPoly::variable(3, k);
    }
    ParamPoly pf = symbolic_pfaffian(m, 3);
    ParamPoly expect = ParamPoly::variable(3, 0) * ParamPoly::variable(3, 1) *
                       ParamPoly::variable(3, 2);
    CHECK(pf == expect);
}
