#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <optional>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "sextic/intpoly.hpp"
#include "sextic/modpoly_detail.hpp"

namespace sextic {

namespace {

namespace mp = boost::multiprecision;

template <unsigned Bits>
using BF = mp::number<mp::cpp_bin_float<Bits, mp::backends::digit_base_2>>;

template <typename R>
struct Cx {
    R re{}, im{};
    Cx() = default;
    Cx(R r, R i) : re(std::move(r)), im(std::move(i)) {}
    Cx operator+(const Cx& o) const { return {re + o.re, im + o.im}; }
    Cx operator-(const Cx& o) const { return {re - o.re, im - o.im}; }
    Cx operator*(const Cx& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Cx operator/(const Cx& o) const {
        R n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    R norm2() const { return re * re + im * im; }
    double mag() const {
        return std::sqrt(norm2().template convert_to<double>());
    }
};

// Degree-pattern pre-filter. Intersects the achievable factor-degree sets
// over several primes; if no proper degree survives, the input is irreducible.
bool prefilter_proves_irreducible(const IntPoly& w) {
    int d = w.degree();
    if (d <= 1) return true;
    uint32_t possible = (2u << d) - 1;
    int used = 0;
    for (uint32_t q : small_primes()) {
        if (q == 2) continue;
        if (used >= 8) break;
        if (mmod(w.lc(), q) == 0) continue;
        std::vector<int> pattern;
        try {
            pattern = factor_degrees_mod_p(w, q);
        } catch (const NotSquarefreeModQError&) {
            continue;
        }
        uint32_t sums = 1;
        for (int part : pattern) sums |= sums << part;
        possible &= sums;
        ++used;
        bool proper = false;
        for (int i = 1; 2 * i <= d; ++i)
            if (possible >> i & 1) proper = true;
        if (!proper) return true;
    }
    return false;
}

// Peels every linear factor x - r off a squarefree monic polynomial.
// Afterwards a leftover of degree <= 3 is irreducible (a monic quadratic or
// cubic over Z factors iff it has an integer root).
void peel_integer_roots(IntPoly& w, std::vector<IntPoly>& out) {
    for (const Integer& r : integer_roots(w)) {
        IntPoly lin({-r, 1});
        IntPoly q;
        bool ok = divide_exact(w, lin, &q);
        (void)ok;
        out.push_back(lin);
        w = q;
    }
}

template <unsigned Bits>
struct RootBall {
    Cx<BF<Bits>> z;
    double rad = 0;
};

template <unsigned Bits>
bool durand_kerner(const IntPoly& w, std::vector<RootBall<Bits>>& out) {
    using R = BF<Bits>;
    const int n = w.degree();
    std::vector<Cx<R>> coef(n + 1);
    double maxmag = 1;
    for (int i = 0; i <= n; ++i) {
        coef[i] = {R(w.coeff(i)), R(0)};
        maxmag = std::max(maxmag, std::abs(w.coeff(i).convert_to<double>()));
    }
    double radius = 1 + maxmag; // Cauchy bound, w monic

    std::vector<Cx<R>> z(n);
    {
        Cx<R> seed(R(0.4), R(0.9));
        Cx<R> acc = seed;
        for (int j = 0; j < n; ++j) {
            z[j] = Cx<R>(acc.re * radius, acc.im * radius);
            acc = acc * seed;
        }
    }

    auto horner = [&](const Cx<R>& x) {
        Cx<R> r = coef[n];
        for (int i = n - 1; i >= 0; --i) r = r * x + coef[i];
        return r;
    };

    const R eps = ldexp(R(1), -int(Bits) + 14);
    bool converged = false;
    for (int it = 0; it < 600 && !converged; ++it) {
        R worst = 0;
        for (int j = 0; j < n; ++j) {
            Cx<R> denom(R(1), R(0));
            for (int i = 0; i < n; ++i)
                if (i != j) denom = denom * (z[j] - z[i]);
            if (denom.norm2() == 0) return false;
            Cx<R> delta = horner(z[j]) / denom;
            z[j] = z[j] - delta;
            R scale = z[j].norm2();
            if (scale < 1) scale = 1;
            R rel = delta.norm2() / scale;
            if (rel > worst) worst = rel;
        }
        if (worst < eps * eps) converged = true;
    }
    if (!converged) return false;

    // Smith's a-posteriori bound: the discs of radius n*|W_j| around the
    // iterates cover all roots; disjoint discs isolate exactly one root each.
    out.assign(n, {});
    for (int j = 0; j < n; ++j) {
        Cx<R> denom(R(1), R(0));
        for (int i = 0; i < n; ++i)
            if (i != j) denom = denom * (z[j] - z[i]);
        Cx<R> wj = horner(z[j]) / denom;
        out[j].z = z[j];
        out[j].rad = n * wj.mag() * 1.0000001 + 1e-280;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double dist = (out[i].z - out[j].z).mag();
            if (dist <= 4 * (out[i].rad + out[j].rad)) return false;
        }
    return true;
}

// Monic product over a subset of root balls, with conservative radius
// tracking for every coefficient.
template <unsigned Bits>
struct BallPoly {
    std::vector<Cx<BF<Bits>>> c;
    std::vector<double> r;
};

template <unsigned Bits>
BallPoly<Bits> subset_product(const std::vector<RootBall<Bits>>& roots,
                              const std::vector<int>& subset) {
    using R = BF<Bits>;
    BallPoly<Bits> p;
    p.c = {Cx<R>(R(1), R(0))};
    p.r = {0.0};
    for (int idx : subset) {
        const auto& ball = roots[idx];
        double zm = ball.z.mag();
        BallPoly<Bits> q;
        q.c.assign(p.c.size() + 1, Cx<R>(R(0), R(0)));
        q.r.assign(p.c.size() + 1, 0.0);
        for (size_t j = 0; j < p.c.size(); ++j) {
            // multiply by (x - z): shift up, subtract z * c[j]
            q.c[j + 1] = q.c[j + 1] + p.c[j];
            q.r[j + 1] += p.r[j];
            q.c[j] = q.c[j] - ball.z * p.c[j];
            q.r[j] += zm * p.r[j] + ball.rad * p.c[j].mag() + ball.rad * p.r[j];
        }
        for (size_t j = 0; j < q.c.size(); ++j)
            q.r[j] = q.r[j] * 1.0000001 + q.c[j].mag() * 1e-70 + 1e-280;
        p = std::move(q);
    }
    return p;
}

enum class ReconstructStatus { Done, Escalate };

template <unsigned Bits>
ReconstructStatus reconstruct(const IntPoly& w, std::vector<IntPoly>& out) {
    std::vector<RootBall<Bits>> roots;
    if (!durand_kerner<Bits>(w, roots)) return ReconstructStatus::Escalate;

    std::vector<int> remaining(roots.size());
    for (size_t i = 0; i < roots.size(); ++i) remaining[i] = int(i);
    IntPoly q = w;

    while (q.degree() > 0) {
        if (q.degree() == 1) {
            out.push_back(q);
            break;
        }
        bool found = false;
        for (int s = 1; 2 * s <= q.degree() && !found; ++s) {
            const int n = int(remaining.size());
            for (uint32_t mask = 1; mask < (1u << n) && !found; ++mask) {
                if (std::popcount(mask) != s) continue;
                std::vector<int> subset;
                for (int b = 0; b < n; ++b)
                    if (mask >> b & 1) subset.push_back(remaining[b]);
                BallPoly<Bits> bp = subset_product<Bits>(roots, subset);
                std::vector<Integer> cand(bp.c.size());
                bool reject = false;
                for (size_t j = 0; j + 1 < bp.c.size() && !reject; ++j) {
                    if (bp.r[j] >= 0.25) return ReconstructStatus::Escalate;
                    double imag = std::abs(bp.c[j].im.template convert_to<double>());
                    if (imag > 0.25) { reject = true; break; }
                    BF<Bits> nearest = round(bp.c[j].re);
                    BF<Bits> dist = abs(bp.c[j].re - nearest);
                    if (dist.template convert_to<double>() > 0.25) { reject = true; break; }
                    cand[j] = nearest.template convert_to<Integer>();
                }
                if (reject) continue;
                cand.back() = 1;
                IntPoly candidate(std::move(cand));
                IntPoly quot;
                if (!divide_exact(q, candidate, &quot)) continue;
                out.push_back(candidate);
                q = quot;
                std::vector<int> rest;
                for (int b = 0; b < n; ++b)
                    if (!(mask >> b & 1)) rest.push_back(remaining[b]);
                remaining = std::move(rest);
                found = true;
            }
        }
        if (!found) {
            out.push_back(q); // no subset divides: q is irreducible
            break;
        }
    }
    return ReconstructStatus::Done;
}

// Irreducible factors of a squarefree monic polynomial of degree >= 1.
std::vector<IntPoly> factor_squarefree(IntPoly w) {
    std::vector<IntPoly> out;
    if (w.degree() == 1) return {w};
    peel_integer_roots(w, out);
    if (w.degree() == 0) return out;
    if (w.degree() <= 3) {
        // no integer root left, so no linear factor; quadratics and cubics
        // over Z factor only through linear ones
        out.push_back(w);
        return out;
    }
    if (prefilter_proves_irreducible(w)) {
        out.push_back(w);
        return out;
    }
    std::vector<IntPoly> rest;
    if (reconstruct<256>(w, rest) == ReconstructStatus::Done ||
        (rest.clear(), reconstruct<512>(w, rest) == ReconstructStatus::Done) ||
        (rest.clear(), reconstruct<1024>(w, rest) == ReconstructStatus::Done) ||
        (rest.clear(), reconstruct<2048>(w, rest) == ReconstructStatus::Done)) {
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
    }
    throw PrecisionError("factor_over_Z: root reconstruction ambiguous at 2048 bits");
}

} // namespace

std::vector<IntPoly> factor_over_Z(const IntPoly& p) {
    int d = p.degree();
    if (d < 1 || d > 6)
        throw UnsupportedDegreeError("factor_over_Z: degree must be between 1 and 6");
    if (!p.is_monic()) throw DomainError("factor_over_Z: polynomial must be monic");
    if (d == 1) return {p};

    IntPoly g = gcd_Z(p, p.derivative());
    IntPoly w = p;
    if (g.degree() > 0) {
        bool ok = divide_exact(p, g, &w);
        if (!ok) throw InternalInconsistencyError("factor_over_Z: gcd does not divide");
    }

    std::vector<IntPoly> distinct = factor_squarefree(w);
    std::vector<IntPoly> result;
    for (const IntPoly& f : distinct) {
        IntPoly rest = p, quot;
        unsigned mult = 0;
        while (divide_exact(rest, f, &quot)) {
            ++mult;
            rest = quot;
        }
        for (unsigned i = 0; i < mult; ++i) result.push_back(f);
    }
    std::sort(result.begin(), result.end(), [](const IntPoly& a, const IntPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.coeffs() < b.coeffs();
    });

    IntPoly check({1});
    for (const IntPoly& f : result) check = check * f;
    if (!(check == p))
        throw InternalInconsistencyError("factor_over_Z: factor product mismatch");
    return result;
}

} // namespace sextic
