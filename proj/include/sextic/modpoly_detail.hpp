#ifndef SEXTIC_MODPOLY_DETAIL_HPP
#define SEXTIC_MODPOLY_DETAIL_HPP

// Small F_q[x] kernel backing factor_degrees_mod_p / gcd_mod_p and the
// irreducibility pre-filter. q must fit comfortably below 2^62 so products
// stay inside unsigned 128-bit arithmetic.

#include <cstdint>
#include <vector>

#include "sextic/intpoly.hpp"

namespace sextic::detail {

struct ModCtx {
    uint64_t q;
    uint64_t mul(uint64_t a, uint64_t b) const;
    uint64_t pow(uint64_t b, uint64_t e) const;
    uint64_t inv(uint64_t a) const;
};

struct ModPoly {
    std::vector<uint64_t> c; // constant first

    static ModPoly from_int_poly(const IntPoly& p, const ModCtx& m);
    IntPoly to_int_poly() const;

    int degree() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    uint64_t lc() const { return c.empty() ? 0 : c.back(); }
    void normalize();
};

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, const ModCtx& m);
ModPoly mp_rem(ModPoly a, const ModPoly& b, const ModCtx& m);
ModPoly mp_monic(ModPoly a, const ModCtx& m);
ModPoly mp_gcd(ModPoly a, ModPoly b, const ModCtx& m);
ModPoly mp_derivative(const ModPoly& a, const ModCtx& m);
ModPoly mp_powmod_x(uint64_t e, const ModPoly& f, const ModCtx& m);
std::vector<int> mp_ddf_degrees(ModPoly f, const ModCtx& m);

} // namespace sextic::detail

#endif
