#include "sextic/classify.hpp"

#include <algorithm>
#include <thread>

#include "sextic/parallel.hpp"

namespace sextic {

namespace {

const char* kA4PairNote =
    "A4 exceptional pair: the published statement lists (k,A,B)=(2,-3,-1), but its "
    "own derivation yields A=3 for k=2 and (2,-3,-1) has disc(g)=-135, not a square; "
    "both pipelines use the derived pair (2,3,-1)";

bool odd(const Integer& n) { return n % 2 != 0; }

Integer strip_primes_of(Integer n, const Integer& support) {
    // divide out of n every prime dividing support
    for (const auto& pp : factorize(support).factors) {
        while (n % pp.prime == 0) n /= pp.prime;
    }
    return n;
}

bool squarefree_or_unit(const Integer& n) { return abs(n) == 1 || is_squarefree(n); }

// The C2xS4 condition list. delta != 0 is guaranteed by irreducibility.
bool item8_c2xs4(const Trinomial& t) {
    const Integer &A = t.A(), &B = t.B();
    Integer d = delta(t);
    if (!is_squarefree(B) || B == -1) return false;
    if (!squarefree_or_unit(strip_primes_of(d, 2 * A * B))) return false;
    if (is_perfect_square(disc_g(t))) return false; // -B^{k-1} delta must not be a square
    bool A2 = !odd(A), B2 = !odd(B);
    if (!A2 && B2 && !(mmod(A, 4) == 3 && mmod(B, 4) == 2)) return false;
    if (A2 && !B2) {
        auto a4 = mmod(A, 4).convert_to<int>(), b4 = mmod(B, 4).convert_to<int>();
        if (!((a4 == 0 && b4 == 1) || (a4 == 2 && b4 == 3))) return false;
    }
    if (t.k() == 1) {
        if (A % 3 == 0 && B % 3 != 0 && !in_Rk(1, A, B)) return false;
    } else {
        if ((A == -2 && B == 2) || (A == 2 && B == -2)) return false;
        if (in_family(t, Family::F3)) return false;
        if (A % 3 == 0 && B % 3 != 0 && !in_Rk(2, A, B)) return false;
    }
    return true;
}

// Returns the matched per-group criterion, in the statement's order, or
// nothing when no criterion matches (then f is not monogenic).
std::optional<GaloisGroup> theorem_main_match(const Trinomial& t) {
    const Integer &A = t.A(), &B = t.B();
    const int k = t.k();
    if (k == 2 && ((A == -2 && B == 2) || (A == 2 && B == -2)))
        return GaloisGroup::C2xS3;
    if ((k == 1 && A == -3 && B == -1) || (k == 2 && A == 3 && B == -1))
        return GaloisGroup::A4;
    if (k == 1 && in_family(t, Family::F1)) return GaloisGroup::C2xA4;
    if (k == 2 && ((A == -3 && B == 1) || (A == -3 && B == 3) || (A == 3 && B == -3))) {
        Integer d = delta(t);
        if (odd(A * B) && is_squarefree(B) && B != -1 && d != 0 && A % radical(d) == 0)
            return GaloisGroup::C2xA4;
    }
    if (in_family(t, Family::F2)) return GaloisGroup::S4plus;
    if ((k == 1 && A == -9 && B == -6) || in_family(t, Family::F3))
        return GaloisGroup::S4minus;
    if (item8_c2xs4(t)) return GaloisGroup::C2xS4;
    return std::nullopt;
}

void add_shared_notes(Classification& c) {
    const Trinomial& t = c.tri;
    if (t.k() == 2 && abs(t.A()) == 3 && t.B() == -1) c.notes.push_back(kA4PairNote);
}

} // namespace

std::string method_name(Method m) {
    return m == Method::Direct ? "direct" : "theorem_main";
}

bool in_family(const Trinomial& t, Family which) {
    const Integer &A = t.A(), &B = t.B();
    const int k = t.k();
    Integer d = delta(t);
    switch (which) {
        case Family::F1: {
            if (k != 1) return false;
            if (!odd(A * B) || B == -1 || !is_squarefree(B)) return false;
            if (d == 0 || A % radical(d) != 0) return false;
            if (A % 3 != 0) return true;
            auto a9 = mmod(A, 9).convert_to<int>(), b9 = mmod(B, 9).convert_to<int>();
            return a9 == 6 && (b9 == 1 || b9 == 4 || b9 == 5 || b9 == 8);
        }
        case Family::F2: {
            if (B != -1) return false;
            if (A == (k % 2 ? -3 : 3)) return false;
            if (A % 4 == 0 || A % 9 == 0) return false;
            if (d == 0) return false;
            Integer core = d;
            while (core % 3 == 0) core /= 3;
            return squarefree_or_unit(core);
        }
        case Family::F3: {
            if (k != 2) return false;
            if (A % 3 != 0 || A % 4 == 0 || B == -1) return false;
            Integer a3 = A / 3;
            if (B != 3 - 4 * a3 * a3 * a3) return false;
            return is_squarefree(B);
        }
    }
    throw InternalInconsistencyError("in_family: unknown family");
}

namespace detail {

FactoredF analyze_f(const Trinomial& t) {
    FactoredF ff;
    ff.factors = factor_over_Z(poly_f(t));
    ff.irreducible = ff.factors.size() == 1;
    return ff;
}

Classification classify_direct_with(const Trinomial& t, const FactoredF& ff) {
    Classification c{t};
    c.method = Method::Direct;
    c.delta = delta(t);
    c.disc_f = disc_f(t);
    c.disc_g = disc_g(t);
    c.irreducible = ff.irreducible;
    if (ff.irreducible) {
        c.galois = detail::galois_group_unchecked(t);
        MonogenicVerdict v = detail::is_monogenic_unchecked(t, true);
        c.monogenic = v.monogenic;
        c.verdict = std::move(v);
    }
    add_shared_notes(c);
    return c;
}

Classification classify_theorem_main_with(const Trinomial& t, const FactoredF& ff) {
    Classification c{t};
    c.method = Method::TheoremMain;
    c.delta = delta(t);
    c.disc_f = disc_f(t);
    c.disc_g = disc_g(t);
    c.irreducible = ff.irreducible;
    if (ff.irreducible) {
        std::optional<GaloisGroup> match = theorem_main_match(t);
        if (match) {
            c.monogenic = true;
            c.galois = *match;
        } else {
            c.monogenic = false;
            c.galois = detail::galois_group_unchecked(t);
            c.notes.push_back("group from the direct Galois stage (closed-form "
                              "criteria only classify monogenic inputs)");
        }
    }
    add_shared_notes(c);
    return c;
}

} // namespace detail

Classification classify_direct(const Trinomial& t) {
    return detail::classify_direct_with(t, detail::analyze_f(t));
}

Classification classify_theorem_main(const Trinomial& t) {
    return detail::classify_theorem_main_with(t, detail::analyze_f(t));
}

CrossValidateReport cross_validate(const std::vector<int>& k_set, long long A_lo,
                                   long long A_hi, long long B_lo, long long B_hi,
                                   unsigned jobs) {
    for (int k : k_set)
        if (k != 1 && k != 2) throw DomainError("cross_validate: k must be 1 or 2");

    struct Partial {
        CrossValidateReport rep;
    };

    std::vector<long long> a_values;
    for (long long a = A_lo; a <= A_hi; ++a)
        if (a != 0) a_values.push_back(a);

    auto work = [&](size_t a_index) {
        Partial part;
        long long a = a_values[a_index];
        for (int k : k_set) {
            for (long long b = B_lo; b <= B_hi; ++b) {
                if (b == 0) continue;
                Trinomial t(k, a, b);
                ++part.rep.cells;
                detail::FactoredF ff = detail::analyze_f(t);
                if (!ff.irreducible) {
                    ++part.rep.reducible;
                    continue;
                }
                ++part.rep.irreducible;
                Classification direct = detail::classify_direct_with(t, ff);
                Classification fast = detail::classify_theorem_main_with(t, ff);
                if (*direct.monogenic != *fast.monogenic || *direct.galois != *fast.galois) {
                    part.rep.mismatches.push_back(
                        {t, "direct=(" + familiar_name(*direct.galois) + "," +
                                (*direct.monogenic ? "monogenic" : "not monogenic") +
                                ") fast=(" + familiar_name(*fast.galois) + "," +
                                (*fast.monogenic ? "monogenic" : "not monogenic") + ")"});
                }
                if (*direct.monogenic) {
                    ++part.rep.monogenic_total;
                    ++part.rep.monogenic_counts[*direct.galois];
                }
                for (const auto& n : fast.notes)
                    if (n == kA4PairNote)
                        part.rep.notes.push_back("(" + std::to_string(k) + "," +
                                                 std::to_string(a) + "," + std::to_string(b) +
                                                 "): " + n);
            }
        }
        return part;
    };

    // canonical merge order: k outermost inside each A column, A ascending;
    // records within a column are already in (k, B) order
    std::vector<Partial> parts = parallel_map<Partial>(a_values.size(), work, jobs);

    CrossValidateReport rep;
    for (const auto& part : parts) {
        rep.cells += part.rep.cells;
        rep.reducible += part.rep.reducible;
        rep.irreducible += part.rep.irreducible;
        rep.monogenic_total += part.rep.monogenic_total;
        for (const auto& [g, n] : part.rep.monogenic_counts) rep.monogenic_counts[g] += n;
        rep.mismatches.insert(rep.mismatches.end(), part.rep.mismatches.begin(),
                              part.rep.mismatches.end());
        rep.notes.insert(rep.notes.end(), part.rep.notes.begin(), part.rep.notes.end());
    }
    auto canonical = [](const Mismatch& x, const Mismatch& y) {
        auto kx = std::tuple(x.tri.k(), x.tri.A(), x.tri.B());
        auto ky = std::tuple(y.tri.k(), y.tri.A(), y.tri.B());
        return kx < ky;
    };
    std::sort(rep.mismatches.begin(), rep.mismatches.end(), canonical);
    std::sort(rep.notes.begin(), rep.notes.end());
    return rep;
}

} // namespace sextic
