#ifndef SEXTIC_CLASSIFY_HPP
#define SEXTIC_CLASSIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sextic/galois.hpp"
#include "sextic/monogenic.hpp"

namespace sextic {

enum class Method { Direct, TheoremMain };

std::string method_name(Method m);

struct Classification {
    Trinomial tri;
    bool irreducible = false;
    std::optional<GaloisGroup> galois;            // present iff irreducible
    std::optional<bool> monogenic;                // present iff irreducible
    std::optional<MonogenicVerdict> verdict;      // per-prime detail, direct path only
    Integer delta, disc_f, disc_g;
    Method method = Method::Direct;
    std::vector<std::string> notes;
};

/// Irreducibility, then the square-class/resolvent Galois decision, then the
/// per-prime index criteria.
Classification classify_direct(const Trinomial& t);

/// The closed-form classification: decides (monogenic, group) jointly from
/// the explicit per-group conditions (finite exceptional pairs, the families
/// F1/F2/F3, and the C2xS4 condition list). Non-monogenic irreducible inputs
/// get their group from the direct Galois stage, which the conditions do not
/// classify.
Classification classify_theorem_main(const Trinomial& t);

enum class Family { F1, F2, F3 };

/// Literal membership test, including the global side conditions of the
/// surrounding per-group criterion (for F1: odd AB, B squarefree, B != -1,
/// rad(|delta|) | A).
bool in_family(const Trinomial& t, Family which);

struct Mismatch {
    Trinomial tri;
    std::string detail;
};

struct CrossValidateReport {
    uint64_t cells = 0;           // (k, A, B) triples visited (AB != 0)
    uint64_t reducible = 0;
    uint64_t irreducible = 0;
    uint64_t monogenic_total = 0;
    std::map<GaloisGroup, uint64_t> monogenic_counts;
    std::vector<Mismatch> mismatches; // expected empty
    std::vector<std::string> notes;   // canonical (k,A,B) order
};

/// Runs both pipelines over the box and compares (monogenic, group) on every
/// irreducible member. jobs == 0 picks the hardware concurrency; the report
/// is identical regardless of the worker count.
CrossValidateReport cross_validate(const std::vector<int>& k_set, long long A_lo,
                                   long long A_hi, long long B_lo, long long B_hi,
                                   unsigned jobs = 0);

namespace detail {
struct FactoredF {
    bool irreducible = false;
    std::vector<IntPoly> factors;
};
FactoredF analyze_f(const Trinomial& t);
Classification classify_direct_with(const Trinomial& t, const FactoredF& ff);
Classification classify_theorem_main_with(const Trinomial& t, const FactoredF& ff);
} // namespace detail

} // namespace sextic

#endif
