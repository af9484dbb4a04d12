#include "sextic/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace sextic {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr uint32_t kSieveBound = 1'000'000;

std::vector<uint32_t> sieve_primes(uint32_t bound) {
    std::vector<bool> composite(bound, false);
    std::vector<uint32_t> primes;
    for (uint32_t i = 2; i < bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (uint64_t j = uint64_t(i) * i; j < bound; j += i) composite[j] = true;
    }
    return primes;
}

u64 mulmod_u64(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

u64 powmod_u64(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin_u64(u64 n, u64 a) {
    if (a % n == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Deterministic below 2^64 with this base set.
constexpr std::array<u64, 12> kMrBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (u64 a : kMrBases)
        if (!miller_rabin_u64(n, a)) return false;
    return true;
}

u64 splitmix64(u64& state) {
    u64 z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

u64 gcd_u64(u64 a, u64 b) {
    while (b) { u64 t = a % b; a = b; b = t; }
    return a;
}

// Brent's improvement of Pollard rho (BIT 20, 1980). n composite, odd, > 1.
u64 brent_rho_u64(u64 n, u64 seed) {
    if (n % 2 == 0) return 2;
    u64 state = seed ^ n;
    while (true) {
        u64 y = splitmix64(state) % (n - 1) + 1;
        u64 c = splitmix64(state) % (n - 1) + 1;
        u64 m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
            u64 k = 0;
            while (k < r && g == 1) {
                ys = y;
                u64 lim = std::min(m, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = (mulmod_u64(y, y, n) + c) % n;
                    q = mulmod_u64(q, x > y ? x - y : y - x, n);
                }
                g = gcd_u64(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            g = 1;
            while (g == 1) {
                ys = (mulmod_u64(ys, ys, n) + c) % n;
                g = gcd_u64(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n) return g;
        // rare: retry with a fresh (y, c)
    }
}

bool miller_rabin_big(const Integer& n, const Integer& a) {
    using boost::multiprecision::powm;
    if (a % n == 0) return true;
    Integer d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    Integer x = powm(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

bool is_prime_big(const Integer& n) {
    // beyond the deterministic 64-bit range: fixed battery plus bases seeded
    // from the candidate, reproducible across calls
    for (u64 a : kMrBases)
        if (!miller_rabin_big(n, a)) return false;
    u64 state = n.convert_to<u64>() ^ 0xa5a5a5a5a5a5a5a5ull;
    for (int i = 0; i < 24; ++i) {
        Integer a = splitmix64(state);
        a = a % (n - 3) + 2;
        if (!miller_rabin_big(n, a)) return false;
    }
    return true;
}

Integer brent_rho_big(const Integer& n, u64 seed) {
    if (n % 2 == 0) return 2;
    u64 state = seed ^ n.convert_to<u64>();
    while (true) {
        Integer y = splitmix64(state);
        Integer c = splitmix64(state);
        y = y % (n - 1) + 1;
        c = c % (n - 1) + 1;
        Integer g = 1, q = 1, x = 0, ys = 0;
        u64 m = 128, r = 1;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (y * y + c) % n;
            u64 k = 0;
            while (k < r && g == 1) {
                ys = y;
                u64 lim = std::min(m, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            }
        }
        if (g != n) return g;
    }
}

void factor_u64_into(u64 n, std::vector<Integer>& out, u64 seed) {
    while (n > 1) {
        if (is_prime_u64(n)) { out.push_back(n); return; }
        u64 d = brent_rho_u64(n, seed);
        factor_u64_into(d, out, seed + 1);
        n /= d;
    }
}

void factor_big_into(const Integer& n, std::vector<Integer>& out, u64 seed) {
    if (n <= 1) return;
    if (n <= std::numeric_limits<u64>::max()) {
        factor_u64_into(n.convert_to<u64>(), out, seed);
        return;
    }
    if (is_prime_big(n)) { out.push_back(n); return; }
    Integer d = brent_rho_big(n, seed);
    factor_big_into(d, out, seed + 1);
    factor_big_into(n / d, out, seed + 2);
}

} // namespace

const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> primes = sieve_primes(kSieveBound);
    return primes;
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n <= std::numeric_limits<u64>::max()) return is_prime_u64(n.convert_to<u64>());
    for (uint32_t p : small_primes()) {
        if (p > 50000) break;
        if (n % p == 0) return false;
    }
    return is_prime_big(n);
}

Factorization factorize(const Integer& n) {
    if (n == 0) throw DomainError("factorize: argument must be nonzero");
    Factorization out;
    out.value = n;
    out.sign = n < 0 ? -1 : 1;
    Integer a = abs(n);
    std::vector<Integer> primes;
    if (a <= std::numeric_limits<u64>::max()) {
        // all-machine-word path; covers every input the scan box produces
        u64 v = a.convert_to<u64>();
        for (uint32_t p : small_primes()) {
            if (u64(p) * p > v) break;
            while (v % p == 0) { primes.push_back(p); v /= p; }
        }
        if (v > 1) factor_u64_into(v, primes, 0x5eed);
    } else {
        for (uint32_t p : small_primes())
            while (a % p == 0) { primes.push_back(p); a /= p; }
        factor_big_into(a, primes, 0x5eed);
    }
    std::sort(primes.begin(), primes.end());
    for (const Integer& p : primes) {
        if (!out.factors.empty() && out.factors.back().prime == p)
            ++out.factors.back().exponent;
        else
            out.factors.push_back({p, 1});
    }
    return out;
}

Integer Factorization::reassemble() const {
    Integer v = sign;
    for (const auto& pp : factors)
        for (unsigned i = 0; i < pp.exponent; ++i) v *= pp.prime;
    return v;
}

bool Factorization::squarefree() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const PrimePower& pp) { return pp.exponent == 1; });
}

bool is_squarefree(const Integer& n) {
    if (n == 0) throw DomainError("is_squarefree: argument must be nonzero");
    Integer a = abs(n);
    if (a == 1) return true;
    return factorize(a).squarefree();
}

Integer radical(const Integer& n) {
    if (n == 0) throw DomainError("radical: argument must be nonzero");
    Integer r = 1;
    for (const auto& pp : factorize(abs(n)).factors) r *= pp.prime;
    return r;
}

unsigned valuation(const Integer& p, const Integer& n) {
    if (n == 0) throw DomainError("valuation: n must be nonzero");
    if (!is_prime(p)) throw DomainError("valuation: p must be prime");
    Integer a = abs(n);
    unsigned e = 0;
    while (a % p == 0) { a /= p; ++e; }
    return e;
}

Integer isqrt(const Integer& n) {
    if (n < 0) throw DomainError("isqrt: argument must be nonnegative");
    if (n < 2) return n;
    // Newton, started above the root so the iteration descends monotonically
    unsigned bits = msb(n) + 1;
    Integer x = Integer(1) << (bits / 2 + 1);
    while (true) {
        Integer y = (x + n / x) >> 1;
        if (y >= x) break;
        x = y;
    }
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

Integer icbrt(const Integer& n) {
    if (n < 0) {
        Integer r = icbrt(-n);
        // floor for negatives: -ceil(cbrt(|n|))
        if (r * r * r != -n) return -r - 1;
        return -r;
    }
    if (n < 2) return n;
    unsigned bits = msb(n) + 1;
    Integer x = Integer(1) << (bits / 3 + 1);
    while (true) {
        Integer y = (2 * x + n / (x * x)) / 3;
        if (y >= x) break;
        x = y;
    }
    while (x * x * x > n) --x;
    while ((x + 1) * (x + 1) * (x + 1) <= n) ++x;
    return x;
}

bool is_perfect_square(const Integer& n) {
    if (n < 0) return false;
    if (n == 0) return true;
    // cheap residue filters before the exact root
    static const auto sq_mod = [](unsigned m) {
        std::vector<bool> v(m, false);
        for (unsigned i = 0; i < m; ++i) v[i * i % m] = true;
        return v;
    };
    static const std::vector<bool> m64 = sq_mod(64), m63 = sq_mod(63), m65 = sq_mod(65);
    unsigned r64 = (n & 63).convert_to<unsigned>();
    if (!m64[r64]) return false;
    if (!m63[(n % 63).convert_to<unsigned>()]) return false;
    if (!m65[(n % 65).convert_to<unsigned>()]) return false;
    Integer r = isqrt(n);
    return r * r == n;
}

Integer mmod(const Integer& n, const Integer& m) {
    if (m < 2) throw DomainError("mmod: modulus must be >= 2");
    Integer r = n % m;
    if (r < 0) r += m;
    return r;
}

} // namespace sextic
