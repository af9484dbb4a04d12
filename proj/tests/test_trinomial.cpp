#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "sextic/trinomial.hpp"

using namespace sextic;

TEST_CASE("construction validates") {
    CHECK_NOTHROW(Trinomial(1, -3, -1));
    CHECK_THROWS_AS(Trinomial(3, 1, 1), DomainError);
    CHECK_THROWS_AS(Trinomial(1, 0, 5), DomainError);
    CHECK_THROWS_AS(Trinomial(2, 4, 0), DomainError);
}

TEST_CASE("delta") {
    CHECK(delta(Trinomial(1, -3, -1)) == -81);
    CHECK(delta(Trinomial(2, 3, -1)) == 81);
    CHECK(delta(Trinomial(2, -2, 2)) == 22);
}

TEST_CASE("swan closed form") {
    CHECK(swan_general(6, 2, -3, -1) == 419904);
    CHECK(swan_general(3, 1, -3, -1) == 81);
    CHECK(swan_general(2, 1, 1, 1) == -3); // disc(x^2+x+1)
    CHECK_THROWS_AS(swan_general(2, 2, 1, 1), DomainError);
    CHECK_THROWS_AS(swan_general(2, 0, 1, 1), DomainError);
    CHECK_THROWS_AS(swan_general(6, 2, 1, 0), DomainError);
}

TEST_CASE("swan agrees with the subresultant discriminant on random trinomials") {
    test::Rng rng(606);
    int done = 0;
    while (done < 300) {
        int n = int(rng.range(2, 6));
        int m = int(rng.range(1, n - 1 < 1 ? 1 : n - 1));
        if (m >= n) continue;
        Integer A = rng.range(-60, 60), B = rng.range(-60, 60);
        if (A == 0 || B == 0) continue;
        ++done;
        std::vector<Integer> c(size_t(n) + 1);
        c[0] = B;
        c[size_t(m)] += A;
        c[size_t(n)] += 1;
        CHECK(swan_general(n, m, A, B) == discriminant_resultant(IntPoly(std::move(c))));
    }
}

TEST_CASE("closed discriminant forms") {
    CHECK(disc_f(Trinomial(1, -3, -1)) == 419904);
    CHECK(disc_g(Trinomial(2, -2, 2)) == -44);
    CHECK(disc_g(Trinomial(1, -3, -1)) == 81);
}

TEST_CASE("auxiliary polynomials") {
    {
        AuxPolys aux = build_aux(Trinomial(2, -2, 2));
        CHECK(aux.h == IntPoly({-4, 0, -4, 0, 0, 0, 1}));  // x^6-4x^2-4
        CHECK(aux.M == IntPoly({16, -16, 0, 0, 1}));       // x^4-16x+16
    }
    {
        AuxPolys aux = build_aux(Trinomial(1, -9, -6));
        CHECK(aux.M == IntPoly({81, 48, 18, 0, 1})); // x^4+18x^2+48x+81
    }
    {
        AuxPolys aux = build_aux(Trinomial(1, -3, -1));
        CHECK(aux.h == IntPoly({-1, 0, 0, 0, 3, 0, 1})); // x^6+3x^4-1
    }
}

TEST_CASE("structural identities on a small box") {
    for (int k : {1, 2})
        for (long long a = -12; a <= 12; ++a)
            for (long long b = -12; b <= 12; ++b) {
                if (a == 0 || b == 0) continue;
                Trinomial t(k, a, b);
                AuxPolys aux = build_aux(t);
                CHECK(aux.h == aux.hhat.inflate(2));
                CHECK(poly_f(t) == aux.g.inflate(2));
                CHECK(disc_f(t) == swan_general(6, 2 * k, a, b));
                CHECK(disc_g(t) == swan_general(3, k, a, b));
                CHECK(disc_f(t) == discriminant_resultant(poly_f(t)));
                CHECK(disc_g(t) == discriminant_resultant(aux.g));
                CHECK((disc_g(t) == 0) == (delta(t) == 0));
                if (delta(t) == 0) CHECK_FALSE(is_irreducible_Q(poly_f(t)));
            }
}
