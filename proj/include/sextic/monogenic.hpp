#ifndef SEXTIC_MONOGENIC_HPP
#define SEXTIC_MONOGENIC_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "sextic/trinomial.hpp"

namespace sextic {

/// (A mod 9, B mod 9) pairs under which p = 3 passes the index test when
/// 3 | A and 3 ∤ B. R1 and R2 differ exactly in (3,10-3k) and (6,3k+1).
constexpr std::array<std::pair<int, int>, 12> kR1 = {{{0, 2}, {0, 4}, {0, 5}, {0, 7},
                                                      {3, 1}, {3, 2}, {3, 8}, {3, 7},
                                                      {6, 1}, {6, 5}, {6, 8}, {6, 4}}};
constexpr std::array<std::pair<int, int>, 12> kR2 = {{{0, 2}, {0, 4}, {0, 5}, {0, 7},
                                                      {3, 1}, {3, 2}, {3, 8}, {3, 4},
                                                      {6, 1}, {6, 5}, {6, 8}, {6, 7}}};

bool in_Rk(int k, const Integer& A, const Integer& B);

struct PrimeCheck {
    Integer prime;
    int condition_id = 0; // 1..5
    bool passed = false;
};

struct MonogenicVerdict {
    /// false when f is reducible: monogenicity is then undefined and the
    /// remaining fields are empty (never conflated with "not monogenic").
    bool applicable = true;
    bool monogenic = false;
    std::vector<PrimeCheck> checked_primes;       // ascending; covers primes of disc(f)
    std::optional<Integer> failing_prime;         // smallest failing, iff not monogenic
};

/// Which index condition applies to p and whether it passes, for the sextic
/// trinomial. Dispatch on (p|A, p|B):
///   1: p|A, p|B   -> p^2 does not divide B
///   2: p|A, p∤B   -> p in {2,3}; (A,B) mod 4 in {(0,1),(2,3)} for p=2,
///                    (A,B) mod 9 in R_k for p=3
///   3: p∤A, p|B   -> p^2 does not divide B for odd p,
///                    (A,B) mod 4 = (3,2) for p=2
///   4: p=2, 2∤AB  -> passes
///   5: p∤2AB      -> p^2 does not divide delta
/// Requires p | disc(f) and f irreducible.
std::pair<int, bool> theorem_general_prime_check(const Trinomial& t, const Integer& p);

/// Aggregates theorem_general_prime_check over the distinct primes of
/// disc(f) = -64 B^{2k-1} delta^2 (factored as 2, |B| and |delta| separately,
/// never as the assembled product).
MonogenicVerdict is_monogenic(const Trinomial& t);

/// The raw Jakhar-Khanduja-Sangwan criterion for x^n + Ax^m + B at p: exact
/// conditions (i)-(v), including the mod-p polynomial coprimality test of
/// condition (iv). Requires 0 < m < n and p | disc; irreducibility of the
/// trinomial is the caller's contract.
bool jks_prime_check(int n, int m, const Integer& A, const Integer& B, const Integer& p);

namespace detail {
std::pair<int, bool> theorem_general_prime_check_unchecked(const Trinomial& t,
                                                           const Integer& p);
MonogenicVerdict is_monogenic_unchecked(const Trinomial& t, bool irreducible);
/// Distinct primes of disc(f), ascending.
std::vector<Integer> disc_f_primes(const Trinomial& t);
} // namespace detail

} // namespace sextic

#endif
