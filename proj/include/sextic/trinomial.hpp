#ifndef SEXTIC_TRINOMIAL_HPP
#define SEXTIC_TRINOMIAL_HPP

#include "sextic/intpoly.hpp"

namespace sextic {

/// The even sextic trinomial x^6 + A x^{2k} + B with k in {1,2} and AB != 0.
/// A pure value; every derived quantity is computed on demand.
class Trinomial {
public:
    Trinomial(int k, Integer A, Integer B);

    int k() const { return k_; }
    const Integer& A() const { return A_; }
    const Integer& B() const { return B_; }

    friend bool operator==(const Trinomial&, const Trinomial&) = default;

private:
    int k_;
    Integer A_, B_;
};

/// 4A^3 + 27B^{3-k}
Integer delta(const Trinomial& t);

/// Discriminant of x^n + Ax^m + B (0 < m < n, B != 0), Swan's closed form:
/// (-1)^{n(n-1)/2} B^{m-1} (n^{n/d} B^{(n-m)/d}
///     - (-1)^{n/d} (n-m)^{(n-m)/d} m^{m/d} A^{n/d})^d,  d = gcd(n, m).
Integer swan_general(int n, int m, const Integer& A, const Integer& B);

/// -64 B^{2k-1} delta^2
Integer disc_f(const Trinomial& t);

/// -B^{k-1} delta
Integer disc_g(const Trinomial& t);

/// x^6 + A x^{2k} + B
IntPoly poly_f(const Trinomial& t);

struct AuxPolys {
    IntPoly g;    // x^3 + A x^k + B, so f = g(x^2)
    IntPoly h;    // x^6 + (-1)^k A B^{k-1} x^{6-2k} - B^2
    IntPoly hhat; // x^3 + (-1)^k A B^{k-1} x^{3-k} - B^2, so h = hhat(x^2)
    IntPoly M;    // x^4 + 2(k-2)A x^2 - 8B x + A^{3-k} (-4B)^{k-1}
};

/// The resolvent polynomials attached to the trinomial.
AuxPolys build_aux(const Trinomial& t);

} // namespace sextic

#endif
