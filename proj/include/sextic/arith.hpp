#ifndef SEXTIC_ARITH_HPP
#define SEXTIC_ARITH_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sextic/errors.hpp"

namespace sextic {

using Integer = boost::multiprecision::cpp_int;

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;
};

/// Exact prime-power decomposition of a nonzero integer.
/// sign * prod(prime^exponent) == value, primes strictly increasing.
struct Factorization {
    Integer value;
    int sign = 1;
    std::vector<PrimePower> factors;

    Integer reassemble() const;
    bool squarefree() const; // every exponent == 1
};

/// Primes below 10^6, sieved once.
const std::vector<uint32_t>& small_primes();

/// Deterministic for |n| < 2^64 (Miller-Rabin with the 12-base certificate),
/// strong probable-prime battery above that. Negative numbers, 0 and 1 are
/// not prime.
bool is_prime(const Integer& n);

/// Trial division below 10^6, then Brent's cycle-finding rho with a
/// Miller-Rabin splitter. The rho randomness is seeded from the input, so
/// results are reproducible and calls are safe from any thread.
Factorization factorize(const Integer& n);

/// True iff no prime square divides |n|. +-1 are squarefree. n must be nonzero.
bool is_squarefree(const Integer& n);

/// Product of the distinct primes dividing |n|; radical(+-1) == 1.
Integer radical(const Integer& n);

/// Largest e with p^e | n. p must be prime and n nonzero.
unsigned valuation(const Integer& p, const Integer& n);

/// Floor of the square root, by Newton iteration with exact final correction.
/// n must be >= 0.
Integer isqrt(const Integer& n);

/// Floor of the real cube root (works for negative n as well).
Integer icbrt(const Integer& n);

/// True iff n == m^2 for some integer m >= 0; all negative n map to false.
bool is_perfect_square(const Integer& n);

/// The unique z in [0, m) with n == z (mod m). Requires m >= 2.
Integer mmod(const Integer& n, const Integer& m);

} // namespace sextic

#endif
