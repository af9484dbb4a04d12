#ifndef SEXTIC_FAMILIES_HPP
#define SEXTIC_FAMILIES_HPP

#include <string>
#include <vector>

#include "sextic/classify.hpp"

namespace sextic {

/// The six single-parameter families:
///   T1 (k=1, C2xA4):  A = -(27t^2+27t+7),        B = (2t+1)A,     t >= 0
///   T2 (k=1, C2xA4):  A = -3(9t^2-21t+13),       B = (6t-7)(A/3), t >= 0
///   S  (k=1, S4+):    A = 6s+1,                  B = -1,          s >= 0
///   U  (k=2, S4-):    A = 6u+3,  B = 3-4(2u+1)^3,                 u >= 1
///   V1 (k=1, C2xS4):  A = 6v+1,                  B = 1,           v >= 0
///   V2 (k=2, C2xS4):  A = 36v+12,                B = 1,           v >= 0
enum class FamilyId { T1, T2, S, U, V1, V2 };

std::string family_name(FamilyId f);
FamilyId family_from_name(const std::string& name);
GaloisGroup family_group(FamilyId f);
long long family_min_parameter(FamilyId f);

struct FamilyMember {
    FamilyId family;
    long long parameter = 0;
    Trinomial trinomial;
    bool admissible = false; // the family's squarefree side condition holds
};

/// Instantiates the closed form at the parameter and evaluates admissibility
/// (T1/T2/U: B squarefree; S/V1: delta squarefree; V2: delta/3^v3(delta)
/// squarefree).
FamilyMember generate(FamilyId family, long long parameter);

struct FamilyVerification {
    FamilyId family;
    std::vector<FamilyMember> members;            // the first `count` admissible
    std::vector<long long> inadmissible;          // parameters skipped on the way
    bool groups_ok = false;                       // all monogenic with the family group
    bool discriminants_distinct = false;          // pairwise distinct disc_f
    bool delta_identity_ok = false;               // T1: disc_g = A^2, T2: disc_g = 9A^2
    std::vector<std::string> failures;
};

/// Scans parameters upward, collects the first `count` admissible members and
/// verifies each against the direct pipeline. The parameter is capped (the
/// squarefree test needs a full factorization and delta grows cubically).
FamilyVerification verify_family(FamilyId family, int count,
                                 long long max_parameter = 10000, unsigned jobs = 0);

} // namespace sextic

#endif
