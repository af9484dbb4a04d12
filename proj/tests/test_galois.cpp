#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sextic/galois.hpp"

using namespace sextic;

namespace {
std::set<std::vector<int>> sset(std::initializer_list<std::vector<int>> xs) {
    return {xs};
}
const std::vector<int> e6 = {1, 1, 1, 1, 1, 1};
} // namespace

TEST_CASE("group labels pair up") {
    CHECK(familiar_name(GaloisGroup::C6) == "C6");
    CHECK(t_notation(GaloisGroup::C6) == "6T1");
    CHECK(t_notation(GaloisGroup::S3) == "6T2");
    CHECK(t_notation(GaloisGroup::C2xS3) == "6T3");
    CHECK(t_notation(GaloisGroup::A4) == "6T4");
    CHECK(t_notation(GaloisGroup::C2xA4) == "6T6");
    CHECK(t_notation(GaloisGroup::S4plus) == "6T7");
    CHECK(t_notation(GaloisGroup::S4minus) == "6T8");
    CHECK(t_notation(GaloisGroup::C2xS4) == "6T11");
}

TEST_CASE("enumerated group orders") {
    CHECK(group_order(GaloisGroup::C6) == 6);
    CHECK(group_order(GaloisGroup::S3) == 6);
    CHECK(group_order(GaloisGroup::C2xS3) == 12);
    CHECK(group_order(GaloisGroup::A4) == 12);
    CHECK(group_order(GaloisGroup::C2xA4) == 24);
    CHECK(group_order(GaloisGroup::S4plus) == 24);
    CHECK(group_order(GaloisGroup::S4minus) == 24);
    CHECK(group_order(GaloisGroup::C2xS4) == 48);
}

TEST_CASE("cycle-type sets match the hand enumeration") {
    CHECK(cycle_types(GaloisGroup::C6) == sset({e6, {2, 2, 2}, {3, 3}, {6}}));
    CHECK(cycle_types(GaloisGroup::S3) == sset({e6, {2, 2, 2}, {3, 3}}));
    CHECK(cycle_types(GaloisGroup::C2xS3) ==
          sset({e6, {2, 2, 1, 1}, {2, 2, 2}, {3, 3}, {6}}));
    CHECK(cycle_types(GaloisGroup::A4) == sset({e6, {2, 2, 1, 1}, {3, 3}}));
    CHECK(cycle_types(GaloisGroup::C2xA4) ==
          sset({e6, {2, 2, 1, 1}, {2, 2, 2}, {3, 3}, {6}}));
    CHECK(cycle_types(GaloisGroup::S4plus) ==
          sset({e6, {2, 2, 1, 1}, {3, 3}, {4, 2}}));
    CHECK(cycle_types(GaloisGroup::S4minus) ==
          sset({e6, {2, 2, 1, 1}, {2, 2, 2}, {3, 3}, {4, 1, 1}}));
    CHECK(cycle_types(GaloisGroup::C2xS4) ==
          sset({e6, {2, 2, 1, 1}, {2, 2, 2}, {3, 3}, {4, 2}, {4, 1, 1}, {6}}));
    // the S4 embeddings differ exactly by parity: only 6T7 lies inside A6
    for (auto t : cycle_types(GaloisGroup::S4plus)) {
        int transpositions = 0;
        for (int c : t) transpositions += c - 1;
        CHECK(transpositions % 2 == 0);
    }
}

TEST_CASE("h reducibility certificates") {
    {
        auto cert = h_is_reducible(Trinomial(2, -2, 2), true);
        REQUIRE(cert.reducible);
        CHECK(*cert.mu == 2);
        REQUIRE(cert.cubic_factors);
        CHECK(cert.cubic_factors->first == IntPoly({2, 2, 2, 1}));
        CHECK(cert.cubic_factors->second == IntPoly({-2, 2, -2, 1}));
        AuxPolys aux = build_aux(Trinomial(2, -2, 2));
        CHECK(cert.cubic_factors->first * cert.cubic_factors->second == aux.h);
    }
    CHECK_FALSE(h_is_reducible(Trinomial(1, -9, -6), true).reducible);
    CHECK(h_is_reducible(Trinomial(1, -3, 6), true).reducible);
    CHECK_THROWS_AS(h_is_reducible(Trinomial(1, -5, -2)), PreconditionError);
}

TEST_CASE("galois group decisions") {
    CHECK(galois_group(Trinomial(1, -3, -1)) == GaloisGroup::A4);
    CHECK(galois_group(Trinomial(1, -9, -6)) == GaloisGroup::S4minus);
    CHECK(galois_group(Trinomial(2, -2, 2)) == GaloisGroup::C2xS3);
    CHECK(galois_group(Trinomial(1, -3, 6)) == GaloisGroup::S3);
    CHECK_THROWS_AS(galois_group(Trinomial(1, -5, -2)), PreconditionError);
}

TEST_CASE("fingerprints stay inside the claimed cycle-type sets") {
    auto fp = cycle_fingerprint(Trinomial(1, -3, -1), 100);
    CHECK(match_group(fp, GaloisGroup::A4));
    int total = 0;
    for (const auto& [pat, n] : fp) {
        (void)pat;
        total += n;
    }
    CHECK(total == 100);

    auto fp2 = cycle_fingerprint(Trinomial(1, -3, 6), 60);
    CHECK(match_group(fp2, GaloisGroup::S3));

    CHECK_THROWS_AS(cycle_fingerprint(Trinomial(1, -5, -2), 10), PreconditionError);
    CHECK_THROWS_AS(cycle_fingerprint(Trinomial(1, -3, -1), 0), DomainError);
}

TEST_CASE("square-class predicates are consistent on a small box") {
    int c6_seen = 0, unique_roots_checked = 0;
    for (int k : {1, 2})
        for (long long a = -20; a <= 20; ++a)
            for (long long b = -20; b <= 20; ++b) {
                if (a == 0 || b == 0) continue;
                Trinomial t(k, a, b);
                Integer dg = disc_g(t);
                if (is_perfect_square(-t.B()) && is_perfect_square(dg))
                    CHECK(is_perfect_square(-t.B() * dg));
                if (!is_irreducible_Q(poly_f(t))) continue;
                auto cert = detail::h_is_reducible_unchecked(t, true);
                if (cert.reducible) {
                    CHECK(dg < 0);                                 // reducible h forces it
                    CHECK(integer_roots(build_aux(t).M).size() == 1); // unique zero
                    ++unique_roots_checked;
                }
                if (detail::galois_group_unchecked(t) == GaloisGroup::C6) ++c6_seen;
            }
    CHECK(c6_seen == 0);
    CHECK(unique_roots_checked > 0);
}
