#include "sextic/monogenic.hpp"

#include <algorithm>
#include <numeric>

namespace sextic {

namespace {

// R1 and R2 must differ exactly in (3,7),(6,4) vs (3,4),(6,7)
constexpr bool rk_tables_consistent() {
    auto contains = [](const auto& table, std::pair<int, int> p) {
        for (const auto& q : table)
            if (q == p) return true;
        return false;
    };
    int diff = 0;
    for (const auto& p : kR1)
        if (!contains(kR2, p)) ++diff;
    for (const auto& p : kR2)
        if (!contains(kR1, p)) ++diff;
    return diff == 4 && contains(kR1, {3, 7}) && contains(kR1, {6, 4}) &&
           contains(kR2, {3, 4}) && contains(kR2, {6, 7}) &&
           !contains(kR1, {3, 4}) && !contains(kR1, {6, 7}) &&
           !contains(kR2, {3, 7}) && !contains(kR2, {6, 4});
}
static_assert(rk_tables_consistent());

Integer int_pow(Integer base, unsigned e) {
    Integer r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

bool divides(const Integer& d, const Integer& n) { return n % d == 0; }

} // namespace

bool in_Rk(int k, const Integer& A, const Integer& B) {
    const auto& table = (k == 1) ? kR1 : kR2;
    std::pair<int, int> key{mmod(A, 9).convert_to<int>(), mmod(B, 9).convert_to<int>()};
    return std::find(table.begin(), table.end(), key) != table.end();
}

namespace detail {

std::pair<int, bool> theorem_general_prime_check_unchecked(const Trinomial& t,
                                                           const Integer& p) {
    const Integer& A = t.A();
    const Integer& B = t.B();
    bool pA = divides(p, A), pB = divides(p, B);
    if (pA && pB) return {1, !divides(p * p, B)};
    if (pA && !pB) {
        if (p == 2) {
            auto a4 = mmod(A, 4).convert_to<int>(), b4 = mmod(B, 4).convert_to<int>();
            return {2, (a4 == 0 && b4 == 1) || (a4 == 2 && b4 == 3)};
        }
        if (p == 3) return {2, in_Rk(t.k(), A, B)};
        return {2, false};
    }
    if (!pA && pB) {
        if (p != 2) return {3, !divides(p * p, B)};
        return {3, mmod(A, 4) == 3 && mmod(B, 4) == 2};
    }
    if (p == 2) return {4, true};
    return {5, !divides(p * p, delta(t))};
}

std::vector<Integer> disc_f_primes(const Trinomial& t) {
    std::vector<Integer> primes{2};
    for (const auto& pp : factorize(t.B()).factors) primes.push_back(pp.prime);
    Integer d = delta(t);
    if (d != 0)
        for (const auto& pp : factorize(d).factors) primes.push_back(pp.prime);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

MonogenicVerdict is_monogenic_unchecked(const Trinomial& t, bool irreducible) {
    MonogenicVerdict v;
    if (!irreducible) {
        v.applicable = false;
        v.monogenic = false;
        return v;
    }
    v.applicable = true;
    v.monogenic = true;
    for (const Integer& p : disc_f_primes(t)) {
        auto [cond, passed] = theorem_general_prime_check_unchecked(t, p);
        v.checked_primes.push_back({p, cond, passed});
        if (!passed) {
            v.monogenic = false;
            if (!v.failing_prime) v.failing_prime = p;
        }
    }
    return v;
}

} // namespace detail

std::pair<int, bool> theorem_general_prime_check(const Trinomial& t, const Integer& p) {
    if (!is_prime(p)) throw DomainError("theorem_general_prime_check: p must be prime");
    if (disc_f(t) % p != 0)
        throw DomainError("theorem_general_prime_check: p does not divide disc(f)");
    if (!is_irreducible_Q(poly_f(t)))
        throw PreconditionError("theorem_general_prime_check: f must be irreducible");
    return detail::theorem_general_prime_check_unchecked(t, p);
}

MonogenicVerdict is_monogenic(const Trinomial& t) {
    return detail::is_monogenic_unchecked(t, is_irreducible_Q(poly_f(t)));
}

bool jks_prime_check(int n, int m, const Integer& A, const Integer& B, const Integer& p) {
    if (m <= 0 || m >= n) throw DomainError("jks_prime_check: need 0 < m < n");
    if (!is_prime(p)) throw DomainError("jks_prime_check: p must be prime");
    Integer disc = swan_general(n, m, A, B);
    if (disc % p != 0) throw DomainError("jks_prime_check: p does not divide the discriminant");

    const int d0 = std::gcd(n, m);
    const int n1 = n / d0, m1 = m / d0;
    bool pA = divides(p, A), pB = divides(p, B);

    if (pA && pB) return !divides(p * p, B); // (i)

    if (pA && !pB) { // (ii)
        unsigned j = valuation(p, Integer(n));
        if (j == 0)
            throw InternalInconsistencyError("jks_prime_check: p | disc forces p | n here");
        Integer pj = int_pow(p, j);
        // exponents p^j <= n, so these powers stay tiny
        Integer b1 = (B + int_pow(-B, unsigned(pj.convert_to<long long>()))) / p;
        Integer a2 = A / p;
        if (divides(p, a2) && !divides(p, b1)) return true;
        Integer expr = a2 * (int_pow(-B, unsigned(m1)) * int_pow(a2, unsigned(n1)) +
                             int_pow(-b1, unsigned(n1)));
        return !divides(p, expr);
    }

    if (!pA && pB) { // (iii)
        unsigned l = valuation(p, Integer(n - m));
        Integer pl = int_pow(p, l);
        Integer a1 = (A + int_pow(-A, unsigned(pl.convert_to<long long>()))) / p;
        Integer b2 = B / p;
        if (divides(p, a1) && !divides(p, b2)) return true;
        Integer expr = a1 * int_pow(b2, unsigned(m - 1)) *
                       (int_pow(-A, unsigned(m1)) * int_pow(a1, unsigned(n1 - m1)) -
                        int_pow(-b2, unsigned(n1 - m1)));
        return !divides(p, expr);
    }

    if (divides(p, Integer(m))) { // (iv)
        unsigned r = std::min(valuation(p, Integer(n)), valuation(p, Integer(m)));
        long long pr = int_pow(p, r).convert_to<long long>();
        int sp = int(n / pr), s = int(m / pr);
        std::vector<Integer> gc(size_t(sp) + 1);
        gc[0] = B;
        gc[size_t(s)] += A;
        gc[size_t(sp)] += 1;
        IntPoly G(std::move(gc));
        // H = (A x^{s p^r} + B + (-A x^s - B)^{p^r}) / p, expanded binomially
        std::vector<Integer> hc(size_t(s) * size_t(pr) + 1);
        Integer binom = 1;
        for (long long i = 0; i <= pr; ++i) {
            hc[size_t(s) * size_t(i)] +=
                binom * int_pow(-A, unsigned(i)) * int_pow(-B, unsigned(pr - i));
            binom = binom * (pr - i) / (i + 1);
        }
        hc[size_t(s) * size_t(pr)] += A;
        hc[0] += B;
        for (auto& c : hc) {
            if (c % p != 0)
                throw InternalInconsistencyError("jks_prime_check: H is not integral");
            c /= p;
        }
        IntPoly H(std::move(hc));
        if (mmod(G.lc(), p) == 0)
            throw InternalInconsistencyError("jks_prime_check: G degenerate mod p");
        bool h_zero_mod_p = true;
        for (const auto& c : H.coeffs())
            if (mmod(c, p) != 0) h_zero_mod_p = false;
        if (h_zero_mod_p) return false; // gcd(G, 0) = G, nonconstant
        uint64_t pu = p.convert_to<uint64_t>();
        return gcd_mod_p(G, H, pu).degree() == 0;
    }

    // (v)
    Integer expr = int_pow(B, unsigned(n1 - m1)) * int_pow(Integer(n1), unsigned(n1)) -
                   int_pow(Integer(-1), unsigned(m1)) * int_pow(A, unsigned(n1)) *
                       int_pow(Integer(m1), unsigned(m1)) *
                       int_pow(Integer(m1 - n1), unsigned(n1 - m1));
    return !divides(p * p, expr);
}

} // namespace sextic
