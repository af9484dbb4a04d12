#include "sextic/families.hpp"

#include <algorithm>
#include <set>

#include "sextic/parallel.hpp"

namespace sextic {

std::string family_name(FamilyId f) {
    switch (f) {
        case FamilyId::T1: return "T1";
        case FamilyId::T2: return "T2";
        case FamilyId::S: return "S";
        case FamilyId::U: return "U";
        case FamilyId::V1: return "V1";
        case FamilyId::V2: return "V2";
    }
    throw InternalInconsistencyError("family_name: unknown family");
}

FamilyId family_from_name(const std::string& name) {
    if (name == "T1") return FamilyId::T1;
    if (name == "T2") return FamilyId::T2;
    if (name == "S") return FamilyId::S;
    if (name == "U") return FamilyId::U;
    if (name == "V1") return FamilyId::V1;
    if (name == "V2") return FamilyId::V2;
    throw DomainError("unknown family: " + name);
}

GaloisGroup family_group(FamilyId f) {
    switch (f) {
        case FamilyId::T1:
        case FamilyId::T2: return GaloisGroup::C2xA4;
        case FamilyId::S: return GaloisGroup::S4plus;
        case FamilyId::U: return GaloisGroup::S4minus;
        case FamilyId::V1:
        case FamilyId::V2: return GaloisGroup::C2xS4;
    }
    throw InternalInconsistencyError("family_group: unknown family");
}

long long family_min_parameter(FamilyId f) { return f == FamilyId::U ? 1 : 0; }

FamilyMember generate(FamilyId family, long long parameter) {
    if (parameter < family_min_parameter(family))
        throw DomainError("generate: parameter below the family minimum");
    const Integer t = parameter;
    auto build = [&](int k, Integer A, Integer B) { return Trinomial(k, A, B); };
    switch (family) {
        case FamilyId::T1: {
            Integer A = -(27 * t * t + 27 * t + 7);
            Trinomial tri = build(1, A, (2 * t + 1) * A);
            return {family, parameter, tri, is_squarefree(tri.B())};
        }
        case FamilyId::T2: {
            // B = (6t-7)(A/3); the factor A/3 keeps disc(g) = 9A^2 exactly
            Integer w = 9 * t * t - 21 * t + 13;
            Trinomial tri = build(1, -3 * w, -(6 * t - 7) * w);
            return {family, parameter, tri, is_squarefree(tri.B())};
        }
        case FamilyId::S: {
            Trinomial tri = build(1, 6 * t + 1, -1);
            return {family, parameter, tri, is_squarefree(delta(tri))};
        }
        case FamilyId::U: {
            Integer c = 2 * t + 1;
            Trinomial tri = build(2, 6 * t + 3, 3 - 4 * c * c * c);
            return {family, parameter, tri, is_squarefree(tri.B())};
        }
        case FamilyId::V1: {
            Trinomial tri = build(1, 6 * t + 1, 1);
            return {family, parameter, tri, is_squarefree(delta(tri))};
        }
        case FamilyId::V2: {
            Trinomial tri = build(2, 36 * t + 12, 1);
            Integer d = delta(tri);
            while (d % 3 == 0) d /= 3;
            return {family, parameter, tri, abs(d) == 1 || is_squarefree(d)};
        }
    }
    throw InternalInconsistencyError("generate: unknown family");
}

FamilyVerification verify_family(FamilyId family, int count, long long max_parameter,
                                 unsigned jobs) {
    if (count < 1) throw DomainError("verify_family: count must be >= 1");
    FamilyVerification out{family};

    std::vector<FamilyMember> admissible;
    for (long long p = family_min_parameter(family);
         int(admissible.size()) < count; ++p) {
        if (p > max_parameter)
            throw DomainError("verify_family: parameter cap reached before " +
                              std::to_string(count) + " admissible members");
        FamilyMember m = generate(family, p);
        if (m.admissible) admissible.push_back(std::move(m));
        else out.inadmissible.push_back(p);
    }

    GaloisGroup expected = family_group(family);
    struct Checked {
        Classification cls;
        std::string failure; // empty when fine
    };
    std::vector<Checked> checked = parallel_map<Checked>(
        admissible.size(),
        [&](size_t i) {
            const FamilyMember& m = admissible[i];
            Checked c{classify_direct(m.trinomial), {}};
            std::string where = family_name(family) + "(" + std::to_string(m.parameter) + ")";
            if (!c.cls.irreducible)
                c.failure = where + ": reducible";
            else if (!*c.cls.monogenic)
                c.failure = where + ": not monogenic";
            else if (*c.cls.galois != expected)
                c.failure = where + ": group " + familiar_name(*c.cls.galois) +
                            ", expected " + familiar_name(expected);
            return c;
        },
        jobs);

    out.groups_ok = true;
    for (const auto& c : checked)
        if (!c.failure.empty()) {
            out.groups_ok = false;
            out.failures.push_back(c.failure);
        }

    std::set<Integer> discs;
    for (const auto& c : checked) discs.insert(c.cls.disc_f);
    out.discriminants_distinct = discs.size() == admissible.size();
    if (!out.discriminants_distinct)
        out.failures.push_back(family_name(family) + ": repeated disc_f values");

    out.delta_identity_ok = true;
    if (family == FamilyId::T1 || family == FamilyId::T2) {
        for (const auto& m : admissible) {
            Integer a2 = m.trinomial.A() * m.trinomial.A();
            Integer want = family == FamilyId::T1 ? a2 : 9 * a2;
            if (disc_g(m.trinomial) != want) {
                out.delta_identity_ok = false;
                out.failures.push_back(family_name(family) + "(" +
                                       std::to_string(m.parameter) +
                                       "): disc(g) identity violated");
            }
        }
    }

    out.members = std::move(admissible);
    return out;
}

} // namespace sextic
