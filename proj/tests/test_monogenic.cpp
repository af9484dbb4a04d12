#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sextic/monogenic.hpp"

using namespace sextic;

TEST_CASE("per-prime dispatch on the table trinomials") {
    {
        auto [cond, passed] = theorem_general_prime_check(Trinomial(1, -3, -1), 3);
        CHECK(cond == 2); // (A,B) = (6,8) mod 9 sits in R1
        CHECK(passed);
    }
    {
        auto [cond, passed] = theorem_general_prime_check(Trinomial(1, -3, 6), 2);
        CHECK(cond == 3); // (A,B) = (1,2) mod 4, not (3,2)
        CHECK_FALSE(passed);
    }
    {
        auto [cond, passed] = theorem_general_prime_check(Trinomial(1, -3, 6), 3);
        CHECK(cond == 1); // 9 does not divide 6
        CHECK(passed);
    }
    CHECK_THROWS_AS(theorem_general_prime_check(Trinomial(1, -3, -1), 5), DomainError);
    CHECK_THROWS_AS(theorem_general_prime_check(Trinomial(1, -5, -2), 2),
                    PreconditionError);
}

TEST_CASE("monogenicity verdicts") {
    {
        MonogenicVerdict v = is_monogenic(Trinomial(1, -9, -6));
        CHECK(v.applicable);
        CHECK(v.monogenic);
        CHECK_FALSE(v.failing_prime);
        for (const auto& c : v.checked_primes) CHECK(c.passed);
    }
    {
        MonogenicVerdict v = is_monogenic(Trinomial(1, -3, 6));
        CHECK(v.applicable);
        CHECK_FALSE(v.monogenic);
        REQUIRE(v.failing_prime);
        CHECK(*v.failing_prime == 2);
    }
    {
        MonogenicVerdict v = is_monogenic(Trinomial(2, -2, 2));
        CHECK(v.applicable);
        CHECK(v.monogenic);
    }
    {
        // reducible: a distinguished non-applicable verdict, not "false"
        MonogenicVerdict v = is_monogenic(Trinomial(1, -5, -2));
        CHECK_FALSE(v.applicable);
        CHECK_FALSE(v.monogenic);
        CHECK(v.checked_primes.empty());
    }
}

TEST_CASE("checked primes cover the discriminant support") {
    MonogenicVerdict v = is_monogenic(Trinomial(1, -9, -6));
    // disc(f) = -64 B delta^2 with delta = -1944 = -2^3 3^5: primes {2, 3}
    REQUIRE(v.checked_primes.size() == 2);
    CHECK(v.checked_primes[0].prime == 2);
    CHECK(v.checked_primes[1].prime == 3);
    Integer df = disc_f(Trinomial(1, -9, -6));
    for (const auto& c : v.checked_primes) CHECK(df % c.prime == 0);
}

TEST_CASE("raw JKS engine") {
    CHECK(jks_prime_check(6, 2, -3, -1, 3));
    CHECK(jks_prime_check(5, 1, 5, 5, 5)); // Eisenstein-style case (i)
    CHECK(jks_prime_check(6, 4, -2, 2, 2));
    CHECK_THROWS_AS(jks_prime_check(6, 2, -3, -1, 7), DomainError); // 7 ∤ disc
    CHECK_THROWS_AS(jks_prime_check(2, 2, 1, 1, 2), DomainError);
}

TEST_CASE("condition-3 carries the squarefree constraint for odd primes") {
    // x^6 + x^2 + 9 is irreducible with 3 | B, 9 | B; Dedekind at 3 shows the
    // index is divisible by 3, and JKS condition (iii) with l = 0 agrees
    Trinomial t(1, 1, 9);
    auto [cond, passed] = theorem_general_prime_check(t, 3);
    CHECK(cond == 3);
    CHECK_FALSE(passed);
    CHECK_FALSE(jks_prime_check(6, 2, 1, 9, 3));
    CHECK_FALSE(is_monogenic(t).monogenic);
}

TEST_CASE("R_k membership") {
    CHECK(in_Rk(1, 6, 8));      // (6,8) in R1
    CHECK(in_Rk(1, -3, -1));    // same pair via mmod
    CHECK(in_Rk(1, 3, 7));      // the k=1-only entries
    CHECK(in_Rk(1, 6, 4));
    CHECK_FALSE(in_Rk(2, 3, 7));
    CHECK_FALSE(in_Rk(2, 6, 4));
    CHECK(in_Rk(2, 3, 4));      // the k=2-only entries
    CHECK(in_Rk(2, 6, 7));
    CHECK_FALSE(in_Rk(1, 6, 2)); // the C2xS3 exclusion pairs
    CHECK_FALSE(in_Rk(1, 6, 7));
}

TEST_CASE("theorem dispatch equals JKS across a small box") {
    for (int k : {1, 2})
        for (long long a = -15; a <= 15; ++a)
            for (long long b = -15; b <= 15; ++b) {
                if (a == 0 || b == 0) continue;
                Trinomial t(k, a, b);
                if (!is_irreducible_Q(poly_f(t))) continue;
                for (const Integer& p : detail::disc_f_primes(t)) {
                    auto [cond, passed] =
                        detail::theorem_general_prime_check_unchecked(t, p);
                    (void)cond;
                    CAPTURE(k, a, b, p.str());
                    CHECK(passed == jks_prime_check(6, 2 * k, a, b, p));
                }
            }
}
