#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "nilsym/catalog.hpp"
#include "nilsym/exterior.hpp"
#include "nilsym/lie_algebra.hpp"

using namespace nilsym;

TEST_CASE("wedge is graded anticommutative") {
    PForm a(4, 1), b(4, 1);
    a.add({1}, 1);
    a.add({2}, 3);
    b.add({3}, 1);
    b.add({2}, -1);
    PForm ab = wedge(a, b);
    PForm ba = wedge(b, a);
    CHECK(ab + ba == PForm(4, 2));
    CHECK(ab.coefficient({1, 3}) == 1);
    CHECK(ab.coefficient({2, 3}) == 3);
    CHECK(ab.coefficient({1, 2}) == -1);
    CHECK(wedge(a, a).is_zero());
}

TEST_CASE("wedge power and top degree truncation") {
    PForm t(4, 2);
    t.add({1, 2}, 1);
    t.add({3, 4}, 1);
    PForm sq = wedge_power(t, 2);
    CHECK(sq.coefficient({1, 2, 3, 4}) == 2);
    CHECK(wedge_power(t, 3).is_zero());
}

TEST_CASE("d squared vanishes iff Jacobi holds") {
    // valid: every basis 1-form on a catalog entry has d(d alpha) = 0
    for (const char* name : {"k8", "filiform6", "dim6_3"}) {
        LieAlgebra l = catalog_named(name)->algebra;
        REQUIRE(l.validate().ok);
        for (int k = 1; k <= l.dim(); ++k) {
            PForm a(l.dim(), 1);
            a.add({k}, 1);
            CHECK(ce_differential(l, ce_differential(l, a)).is_zero());
        }
        CHECK((d_matrix(l, 2) * d_matrix(l, 1)).is_zero());
    }
    // invalid: a non-Jacobi table must break d^2 = 0 on some 1-form
    LieAlgebra bad(3);
    bad.add_constant(1, 2, 3, 1);
    bad.add_constant(1, 3, 1, 1);   // Jacobiator(X1,X2,X3) = -X3
    REQUIRE(!bad.validate().ok);
    bool broken = false;
    for (int k = 1; k <= 3 && !broken; ++k) {
        PForm a(3, 1);
        a.add({k}, 1);
        broken = !ce_differential(bad, ce_differential(bad, a)).is_zero();
    }
    CHECK(broken);
}

TEST_CASE("cohomology dimensions") {
    // h3: b0=1, b1=2, b2=2, b3=1
    LieAlgebra h3(3);
    h3.add_constant(1, 2, 3, 1);
    CHECK(cohomology_dims(h3) == std::vector<int>{1, 2, 2, 1});
    // abelian: full binomial row
    CHECK(cohomology_dims(LieAlgebra(3)) == std::vector<int>{1, 3, 3, 1});
}

TEST_CASE("cartan class on k8 matches the frozen value") {
    LieAlgebra k8 = catalog_named("k8")->algebra;
    for (int k : {3, 5}) {
        PForm a(8, 1);
        a.add({k}, 1);
        CHECK(cartan_class(k8, a) == 7);
    }
    PForm a1(8, 1);
    a1.add({1}, 1);
    CHECK(cartan_class(k8, a1) == 1);   // d(alpha_1) = 0, alpha_1 != 0
}

TEST_CASE("pfaffian squared equals determinant") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dist(-5, 5);
    for (int n = 2; n <= 10; n += 2)
        for (int rep = 0; rep < 5; ++rep) {
            Mat a(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    int v = dist(rng);
                    a(i, j) = v;
                    a(j, i) = -v;
                }
            CHECK(pfaffian(a) * pfaffian(a) == a.det());
        }
    // odd size: zero by convention; empty: 1
    Mat odd(3, 3);
    odd(0, 1) = 1;
    odd(1, 0) = -1;
    CHECK(pfaffian(odd) == 0);
    CHECK(pfaffian(Mat(0, 0)) == 1);
    Mat notskew(2, 2);
    notskew(0, 0) = 1;
    CHECK_THROWS_AS(pfaffian(notskew), std::invalid_argument);
}

TEST_CASE("top wedge power equals p! times the pfaffian") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int n : {4, 6, 8})
        for (int rep = 0; rep < 10; ++rep) {
            PForm theta(n, 2);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) theta.add({i, j}, dist(rng));
            Rational pf = pfaffian(gram(theta));
            PForm top = wedge_power(theta, n / 2);
            Rational fact = 1;
            for (int i = 2; i <= n / 2; ++i) fact *= i;
            std::vector<int> all(n);
            for (int i = 0; i < n; ++i) all[i] = i + 1;
            CHECK(top.coefficient(all) == fact * pf);
        }
}

TEST_CASE("nondegeneracy check") {
    PForm std4(4, 2);
    std4.add({1, 2}, 1);
    std4.add({3, 4}, 1);
    LieAlgebra a4(4);
    CHECK(is_nondegenerate(a4, std4));
    PForm rank2(4, 2);
    rank2.add({1, 2}, 1);
    CHECK(!is_nondegenerate(a4, rank2));
}
