#ifndef SEXTIC_INTPOLY_HPP
#define SEXTIC_INTPOLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "sextic/arith.hpp"

namespace sextic {

/// Dense integer polynomial, constant term first. The zero polynomial has an
/// empty coefficient vector and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long long> coeffs);

    static IntPoly monomial(Integer c, int deg);

    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const Integer& coeff(int i) const;
    const Integer& lc() const;
    const std::vector<Integer>& coeffs() const { return c_; }

    Integer eval(const Integer& x) const;
    IntPoly derivative() const;
    /// p(x^k)
    IntPoly inflate(int k) const;
    /// gcd of coefficients (positive); content of the zero polynomial is 0.
    Integer content() const;
    IntPoly primitive_part() const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const Integer& c, const IntPoly& a);
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

    std::string str(const std::string& var = "x") const;

private:
    std::vector<Integer> c_;
    void normalize();
};

/// Quotient of num by den when the division over Z is exact, empty otherwise.
bool divide_exact(const IntPoly& num, const IntPoly& den, IntPoly* quotient);

/// Resultant by the subresultant PRS (Cohen, Algorithm 3.3.7). Exact.
Integer resultant(const IntPoly& a, const IntPoly& b);

/// (-1)^{d(d-1)/2} Res(p, p') for monic p of degree >= 2.
Integer discriminant_resultant(const IntPoly& p);

/// Gcd over Z, primitive with positive leading coefficient.
IntPoly gcd_Z(const IntPoly& a, const IntPoly& b);

/// All distinct integer roots, ascending. Candidates are the divisors of the
/// trailing nonzero coefficient, each verified exactly.
std::vector<Integer> integer_roots(const IntPoly& p);

/// Monic irreducible factors over Q (equivalently over Z, by Gauss), with
/// multiplicity, product equal to the input. Supports monic p of degree 1..6.
///
/// Strategy: a finite-field degree-pattern pre-filter first; if that does not
/// prove irreducibility, complex roots at >= 256 fractional bits with
/// certified radii, monic products over root subsets of size 1..deg/2,
/// coefficients rounded and accepted only on exact trial division. Precision
/// doubles on ambiguity, capped at 2048 bits (PrecisionError beyond).
std::vector<IntPoly> factor_over_Z(const IntPoly& p);

/// True iff factor_over_Z(p) has exactly one element.
bool is_irreducible_Q(const IntPoly& p);

/// Degrees of the irreducible factors of p mod q (ascending, with
/// multiplicity), by distinct-degree factorization. Requires q prime, q not
/// dividing lc(p), and p squarefree mod q (NotSquarefreeModQError otherwise).
std::vector<int> factor_degrees_mod_p(const IntPoly& p, uint64_t q);

/// Monic gcd in F_q[x], coefficients lifted to [0, q). a and b must not both
/// vanish mod q.
IntPoly gcd_mod_p(const IntPoly& a, const IntPoly& b, uint64_t q);

} // namespace sextic

#endif
