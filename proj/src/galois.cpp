#include "sextic/galois.hpp"

#include <algorithm>
#include <array>

namespace sextic {

namespace {

using Perm = std::array<uint8_t, 6>;

Perm compose(const Perm& a, const Perm& b) {
    Perm r;
    for (int i = 0; i < 6; ++i) r[i] = a[b[i]];
    return r;
}

// Element (eps; pi) of C2 wr S3 acting on {0,1,2} + {3,4,5} (i and i+3 are
// the two square roots of the i-th cubic root): i^s -> pi(i)^(s*eps_i).
Perm wreath(std::array<int, 3> eps, std::array<int, 3> pi) {
    Perm p;
    for (int i = 0; i < 3; ++i) {
        bool flip = eps[i] < 0;
        p[i] = uint8_t(pi[i] + (flip ? 3 : 0));
        p[i + 3] = uint8_t(pi[i] + (flip ? 0 : 3));
    }
    return p;
}

std::vector<Perm> closure(std::vector<Perm> gens) {
    std::set<Perm> seen(gens.begin(), gens.end());
    seen.insert(Perm{0, 1, 2, 3, 4, 5});
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Perm> current(seen.begin(), seen.end());
        for (const Perm& a : current)
            for (const Perm& g : gens)
                if (seen.insert(compose(g, a)).second) grew = true;
    }
    return {seen.begin(), seen.end()};
}

std::vector<int> cycle_type(const Perm& p) {
    std::array<bool, 6> used{};
    std::vector<int> type;
    for (int i = 0; i < 6; ++i) {
        if (used[i]) continue;
        int len = 0, j = i;
        while (!used[j]) {
            used[j] = true;
            j = p[j];
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

constexpr std::array<int, 3> kId = {0, 1, 2};
constexpr std::array<int, 3> kSwap01 = {1, 0, 2};
constexpr std::array<int, 3> kRot = {1, 2, 0};
constexpr std::array<int, 3> kAllMinus = {-1, -1, -1};
constexpr std::array<int, 3> kAllPlus = {1, 1, 1};

std::vector<Perm> generators(GaloisGroup g) {
    switch (g) {
        case GaloisGroup::C6:
            return {wreath(kAllMinus, kRot)};
        case GaloisGroup::S3:
            return {wreath(kAllMinus, kSwap01), wreath(kAllPlus, kRot)};
        case GaloisGroup::C2xS3:
            return {wreath(kAllMinus, kId), wreath(kAllPlus, kSwap01),
                    wreath(kAllPlus, kRot)};
        case GaloisGroup::A4:
            return {wreath({-1, -1, 1}, kId), wreath(kAllPlus, kRot)};
        case GaloisGroup::C2xA4:
            return {wreath({-1, -1, 1}, kId), wreath(kAllMinus, kId),
                    wreath(kAllPlus, kRot)};
        case GaloisGroup::S4plus:
            return {wreath({-1, -1, 1}, kId), wreath(kAllPlus, kSwap01),
                    wreath(kAllPlus, kRot)};
        case GaloisGroup::S4minus:
            return {wreath({-1, -1, 1}, kId), wreath({-1, 1, 1}, kSwap01),
                    wreath(kAllPlus, kRot)};
        case GaloisGroup::C2xS4:
            return {wreath({-1, 1, 1}, kId), wreath(kAllPlus, kSwap01),
                    wreath(kAllPlus, kRot)};
    }
    throw InternalInconsistencyError("generators: unknown group");
}

struct GroupData {
    std::set<std::vector<int>> types;
    int order = 0;
};

const GroupData& group_data(GaloisGroup g) {
    static const std::array<GroupData, 8> all = [] {
        std::array<GroupData, 8> data;
        for (int i = 0; i < 8; ++i) {
            auto grp = static_cast<GaloisGroup>(i);
            std::vector<Perm> elems = closure(generators(grp));
            data[size_t(i)].order = int(elems.size());
            for (const Perm& p : elems) data[size_t(i)].types.insert(cycle_type(p));
        }
        return data;
    }();
    return all[size_t(static_cast<int>(g))];
}

} // namespace

std::string familiar_name(GaloisGroup g) {
    switch (g) {
        case GaloisGroup::C6: return "C6";
        case GaloisGroup::S3: return "S3";
        case GaloisGroup::C2xS3: return "C2xS3";
        case GaloisGroup::A4: return "A4";
        case GaloisGroup::C2xA4: return "C2xA4";
        case GaloisGroup::S4plus: return "S4plus";
        case GaloisGroup::S4minus: return "S4minus";
        case GaloisGroup::C2xS4: return "C2xS4";
    }
    throw InternalInconsistencyError("familiar_name: unknown group");
}

std::string t_notation(GaloisGroup g) {
    switch (g) {
        case GaloisGroup::C6: return "6T1";
        case GaloisGroup::S3: return "6T2";
        case GaloisGroup::C2xS3: return "6T3";
        case GaloisGroup::A4: return "6T4";
        case GaloisGroup::C2xA4: return "6T6";
        case GaloisGroup::S4plus: return "6T7";
        case GaloisGroup::S4minus: return "6T8";
        case GaloisGroup::C2xS4: return "6T11";
    }
    throw InternalInconsistencyError("t_notation: unknown group");
}

const std::set<std::vector<int>>& cycle_types(GaloisGroup g) { return group_data(g).types; }

int group_order(GaloisGroup g) { return group_data(g).order; }

namespace detail {

HReducibilityCertificate h_is_reducible_unchecked(const Trinomial& t, bool paranoid) {
    AuxPolys aux = build_aux(t);
    HReducibilityCertificate cert;
    for (const Integer& mu : integer_roots(aux.M)) {
        Integer num = mu * mu + (t.k() - 2) * t.A();
        if (num % 2 != 0) continue;
        Integer c = num / 2;
        IntPoly left({t.B(), c, mu, 1});
        IntPoly right({-t.B(), c, -mu, 1});
        if (left * right == aux.h) {
            cert.reducible = true;
            cert.mu = mu;
            cert.cubic_factors = {left, right};
            break;
        }
    }
    if (paranoid) {
        bool oracle = factor_over_Z(aux.h).size() > 1;
        if (oracle != cert.reducible)
            throw InternalInconsistencyError(
                "h_is_reducible: resolvent route disagrees with factor_over_Z");
    }
    return cert;
}

GaloisGroup galois_group_unchecked(const Trinomial& t) {
    Integer dg = disc_g(t);
    bool sB = is_perfect_square(-t.B());
    bool sD = is_perfect_square(dg);
    bool sBD = is_perfect_square(-t.B() * dg);
    bool hred = h_is_reducible_unchecked(t).reducible;
    if (hred) {
        if (!sB && sD) return GaloisGroup::C6;
        if (!sB && !sD && sBD) return GaloisGroup::S3;
        if (!sB && !sD && !sBD) return GaloisGroup::C2xS3;
    } else {
        if (sB && sD) return GaloisGroup::A4;
        if (!sB && sD) return GaloisGroup::C2xA4;
        if (sB && !sD) return GaloisGroup::S4plus;
        if (!sB && !sD && sBD) return GaloisGroup::S4minus;
        if (!sB && !sD && !sBD) return GaloisGroup::C2xS4;
    }
    throw InternalInconsistencyError("galois_group: unmatched square-class tuple");
}

} // namespace detail

HReducibilityCertificate h_is_reducible(const Trinomial& t, bool paranoid) {
    if (!is_irreducible_Q(poly_f(t)))
        throw PreconditionError("h_is_reducible: f must be irreducible");
    return detail::h_is_reducible_unchecked(t, paranoid);
}

GaloisGroup galois_group(const Trinomial& t) {
    if (!is_irreducible_Q(poly_f(t)))
        throw PreconditionError("galois_group: f must be irreducible");
    return detail::galois_group_unchecked(t);
}

std::map<std::vector<int>, int> cycle_fingerprint(const Trinomial& t, int prime_count) {
    if (prime_count < 1) throw DomainError("cycle_fingerprint: prime_count must be >= 1");
    if (!is_irreducible_Q(poly_f(t)))
        throw PreconditionError("cycle_fingerprint: f must be irreducible");
    IntPoly f = poly_f(t);
    Integer disc = disc_f(t);
    std::map<std::vector<int>, int> tally;
    int used = 0;
    for (uint32_t q : small_primes()) {
        if (q == 2) continue;
        if (disc % q == 0) continue;
        ++tally[factor_degrees_mod_p(f, q)];
        if (++used >= prime_count) break;
    }
    if (used < prime_count)
        throw DomainError("cycle_fingerprint: prime pool exhausted");
    return tally;
}

bool match_group(const std::map<std::vector<int>, int>& fingerprint, GaloisGroup g) {
    const auto& allowed = cycle_types(g);
    for (const auto& [pattern, count] : fingerprint) {
        (void)count;
        if (!allowed.count(pattern)) return false;
    }
    return true;
}

} // namespace sextic
