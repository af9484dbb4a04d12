#ifndef SEXTIC_GALOIS_HPP
#define SEXTIC_GALOIS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "sextic/trinomial.hpp"

namespace sextic {

/// The eight transitive groups that occur for irreducible even sextics.
enum class GaloisGroup { C6, S3, C2xS3, A4, C2xA4, S4plus, S4minus, C2xS4 };

/// "C6", "S3", "C2xS3", "A4", "C2xA4", "S4plus", "S4minus", "C2xS4"
std::string familiar_name(GaloisGroup g);

/// Transitive-group labels: 6T1, 6T2, 6T3, 6T4, 6T6, 6T7, 6T8, 6T11.
std::string t_notation(GaloisGroup g);

/// Cycle types (descending degree lists) of the group's degree-6 embedding,
/// derived once by enumerating the group from generator permutations inside
/// the wreath product C2 wr S3 on {±1, ±2, ±3}.
const std::set<std::vector<int>>& cycle_types(GaloisGroup g);

/// Order of the embedded group (enumerated, for cross-checks).
int group_order(GaloisGroup g);

struct HReducibilityCertificate {
    bool reducible = false;
    std::optional<Integer> mu;                        // the integer zero of M
    std::optional<std::pair<IntPoly, IntPoly>> cubic_factors; // multiply to h
};

/// Decides reducibility of h over Q through the quartic resolvent M: h is
/// reducible iff M has an integer zero mu for which the cubic pair
/// (x^3 + mu x^2 + c x + B)(x^3 - mu x^2 + c x - B), c = (mu^2 + (k-2)A)/2,
/// has integer coefficients and multiplies exactly to h.
/// Requires f irreducible over Q (PreconditionError otherwise).
/// With paranoid set, additionally cross-checks against factor_over_Z(h).
HReducibilityCertificate h_is_reducible(const Trinomial& t, bool paranoid = false);

/// Gal(f) for irreducible f, from the square classes of -B, disc(g),
/// -B*disc(g) together with the reducibility of h. An unmatched combination
/// raises InternalInconsistencyError (the rows are exhaustive).
GaloisGroup galois_group(const Trinomial& t);

/// Factorization degree patterns of f modulo the first prime_count odd primes
/// not dividing disc(f), tallied. A sampling sanity oracle, not a proof.
std::map<std::vector<int>, int> cycle_fingerprint(const Trinomial& t, int prime_count);

/// True iff every observed pattern lies in the claimed group's cycle-type set.
bool match_group(const std::map<std::vector<int>, int>& fingerprint, GaloisGroup g);

namespace detail {
// variants that skip the (expensive) irreducibility re-check; callers must
// have established it
HReducibilityCertificate h_is_reducible_unchecked(const Trinomial& t, bool paranoid = false);
GaloisGroup galois_group_unchecked(const Trinomial& t);
} // namespace detail

} // namespace sextic

#endif
