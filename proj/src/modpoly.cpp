#include "sextic/intpoly.hpp"
#include "sextic/modpoly_detail.hpp"

#include <algorithm>

namespace sextic::detail {

namespace {
using u128 = unsigned __int128;
}

uint64_t ModCtx::mul(uint64_t a, uint64_t b) const { return uint64_t(u128(a) * b % q); }

uint64_t ModCtx::pow(uint64_t b, uint64_t e) const {
    uint64_t r = 1 % q;
    b %= q;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

uint64_t ModCtx::inv(uint64_t a) const { return pow(a % q, q - 2); }

void ModPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

ModPoly ModPoly::from_int_poly(const IntPoly& p, const ModCtx& m) {
    ModPoly r;
    r.c.resize(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i)
        r.c[size_t(i)] = mmod(p.coeff(i), m.q).convert_to<uint64_t>();
    r.normalize();
    return r;
}

IntPoly ModPoly::to_int_poly() const {
    std::vector<Integer> v(c.size());
    for (size_t i = 0; i < c.size(); ++i) v[i] = c[i];
    return IntPoly(std::move(v));
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, const ModCtx& m) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<u128> acc(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) {
            acc[i + j] += u128(a.c[i]) * b.c[j];
            acc[i + j] %= m.q;
        }
    ModPoly r;
    r.c.resize(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) r.c[i] = uint64_t(acc[i]);
    r.normalize();
    return r;
}

ModPoly mp_rem(ModPoly a, const ModPoly& b, const ModCtx& m) {
    uint64_t binv = m.inv(b.lc());
    while (!a.is_zero() && a.degree() >= b.degree()) {
        uint64_t f = m.mul(a.c.back(), binv);
        int shift = a.degree() - b.degree();
        for (int i = 0; i <= b.degree(); ++i) {
            uint64_t& t = a.c[size_t(i + shift)];
            t = (t + m.q - m.mul(f, b.c[size_t(i)])) % m.q;
        }
        a.normalize();
    }
    return a;
}

ModPoly mp_monic(ModPoly a, const ModCtx& m) {
    if (a.is_zero()) return a;
    uint64_t s = m.inv(a.lc());
    for (auto& x : a.c) x = m.mul(x, s);
    return a;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, const ModCtx& m) {
    while (!b.is_zero()) {
        ModPoly r = mp_rem(std::move(a), b, m);
        a = std::move(b);
        b = std::move(r);
    }
    return mp_monic(std::move(a), m);
}

ModPoly mp_derivative(const ModPoly& a, const ModCtx& m) {
    ModPoly r;
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = m.mul(a.c[i], i % m.q);
    r.normalize();
    return r;
}

ModPoly mp_powmod_x(uint64_t e, const ModPoly& f, const ModCtx& m) {
    // x^e mod f by square and multiply
    ModPoly x;
    x.c = {0, 1};
    ModPoly r;
    r.c = {1};
    ModPoly base = mp_rem(x, f, m);
    while (e) {
        if (e & 1) r = mp_rem(mp_mul(r, base, m), f, m);
        base = mp_rem(mp_mul(base, base, m), f, m);
        e >>= 1;
    }
    return r;
}

std::vector<int> mp_ddf_degrees(ModPoly f, const ModCtx& m) {
    std::vector<int> degrees;
    f = mp_monic(std::move(f), m);
    ModPoly w;
    w.c = {0, 1}; // x
    w = mp_rem(w, f, m);
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        // w = x^(q^d) mod f
        ModPoly wq;
        {
            // raise w to the q-th power mod f via x^q substitution is costly;
            // plain repeated squaring on w works at these degrees
            ModPoly r;
            r.c = {1};
            ModPoly base = w;
            uint64_t e = m.q;
            while (e) {
                if (e & 1) r = mp_rem(mp_mul(r, base, m), f, m);
                base = mp_rem(mp_mul(base, base, m), f, m);
                e >>= 1;
            }
            wq = std::move(r);
        }
        w = std::move(wq);
        ModPoly diff = w;
        // w - x
        if (diff.c.size() < 2) diff.c.resize(2, 0);
        diff.c[1] = (diff.c[1] + m.q - 1) % m.q;
        diff.normalize();
        ModPoly g = mp_gcd(diff, f, m);
        if (g.degree() > 0) {
            for (int i = 0; i < g.degree() / d; ++i) degrees.push_back(d);
            ModPoly q = f;
            // exact division f / g
            ModPoly quo;
            {
                ModPoly rem = f;
                uint64_t ginv = m.inv(g.lc());
                quo.c.assign(size_t(f.degree() - g.degree() + 1), 0);
                while (!rem.is_zero() && rem.degree() >= g.degree()) {
                    uint64_t fct = m.mul(rem.c.back(), ginv);
                    int shift = rem.degree() - g.degree();
                    quo.c[size_t(shift)] = fct;
                    for (int i = 0; i <= g.degree(); ++i) {
                        uint64_t& t = rem.c[size_t(i + shift)];
                        t = (t + m.q - m.mul(fct, g.c[size_t(i)])) % m.q;
                    }
                    rem.normalize();
                }
                quo.normalize();
            }
            f = std::move(quo);
            if (f.degree() < 1) break;
            w = mp_rem(w, f, m);
        }
    }
    if (f.degree() > 0) degrees.push_back(f.degree());
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

} // namespace sextic::detail

namespace sextic {

std::vector<int> factor_degrees_mod_p(const IntPoly& p, uint64_t q) {
    if (!is_prime(Integer(q))) throw DomainError("factor_degrees_mod_p: q must be prime");
    if (p.is_zero()) throw DomainError("factor_degrees_mod_p: zero polynomial");
    if (mmod(p.lc(), q) == 0)
        throw DomainError("factor_degrees_mod_p: q divides the leading coefficient");
    detail::ModCtx m{q};
    detail::ModPoly f = detail::ModPoly::from_int_poly(p, m);
    detail::ModPoly g = detail::mp_gcd(f, detail::mp_derivative(f, m), m);
    if (g.degree() != 0)
        throw NotSquarefreeModQError("factor_degrees_mod_p: p has a repeated factor mod q");
    return detail::mp_ddf_degrees(std::move(f), m);
}

IntPoly gcd_mod_p(const IntPoly& a, const IntPoly& b, uint64_t q) {
    if (!is_prime(Integer(q))) throw DomainError("gcd_mod_p: q must be prime");
    detail::ModCtx m{q};
    detail::ModPoly am = detail::ModPoly::from_int_poly(a, m);
    detail::ModPoly bm = detail::ModPoly::from_int_poly(b, m);
    if (am.is_zero() && bm.is_zero())
        throw DomainError("gcd_mod_p: both arguments vanish mod q");
    return detail::mp_gcd(std::move(am), std::move(bm), m).to_int_poly();
}

} // namespace sextic
