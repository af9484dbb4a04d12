#include "sextic/intpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sextic {

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
    c_.assign(coeffs.begin(), coeffs.end());
    normalize();
}

IntPoly IntPoly::monomial(Integer c, int deg) {
    std::vector<Integer> v(deg + 1);
    v[deg] = std::move(c);
    return IntPoly(std::move(v));
}

const Integer& IntPoly::coeff(int i) const {
    static const Integer zero = 0;
    if (i < 0 || i >= int(c_.size())) return zero;
    return c_[i];
}

const Integer& IntPoly::lc() const {
    static const Integer zero = 0;
    return c_.empty() ? zero : c_.back();
}

Integer IntPoly::eval(const Integer& x) const {
    Integer r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Integer> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Integer(i) * c_[i];
    return IntPoly(std::move(d));
}

IntPoly IntPoly::inflate(int k) const {
    if (is_zero()) return IntPoly();
    std::vector<Integer> v(size_t(degree()) * k + 1);
    for (size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
    return IntPoly(std::move(v));
}

Integer IntPoly::content() const {
    Integer g = 0;
    for (const auto& c : c_) g = gcd(g, c);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Integer g = content();
    std::vector<Integer> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] / g;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
    std::vector<Integer> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(int(i)) + b.coeff(int(i));
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(int(i)) - b.coeff(int(i));
    return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Integer> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(v));
}

IntPoly operator*(const Integer& c, const IntPoly& a) {
    std::vector<Integer> v(a.c_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = c * a.c_[i];
    return IntPoly(std::move(v));
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& c = coeff(i);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Integer a = abs(c);
        if (a != 1 || i == 0) os << a.str();
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

bool divide_exact(const IntPoly& num, const IntPoly& den, IntPoly* quotient) {
    if (den.is_zero()) throw DomainError("divide_exact: division by zero polynomial");
    if (num.is_zero()) {
        if (quotient) *quotient = IntPoly();
        return true;
    }
    if (num.degree() < den.degree()) return false;
    std::vector<Integer> rem = num.coeffs();
    std::vector<Integer> q(num.degree() - den.degree() + 1);
    const Integer& d = den.lc();
    for (int i = int(q.size()) - 1; i >= 0; --i) {
        Integer& top = rem[i + den.degree()];
        if (top == 0) continue;
        if (top % d != 0) return false;
        Integer f = top / d;
        q[i] = f;
        for (int j = 0; j <= den.degree(); ++j) rem[i + j] -= f * den.coeff(j);
    }
    for (const auto& r : rem)
        if (r != 0) return false;
    if (quotient) *quotient = IntPoly(std::move(q));
    return true;
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b, computed fraction-free.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    const Integer& d = b.lc();
    int e = a.degree() - b.degree() + 1;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        IntPoly t = r.lc() * IntPoly::monomial(1, r.degree() - b.degree());
        r = d * r - t * b;
        --e;
    }
    // keep the full lc(b)^(delta+1) scaling even when the degree collapses early
    while (e-- > 0) r = d * r;
    return r;
}

Integer int_pow(Integer base, unsigned e) {
    Integer r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

} // namespace

Integer resultant(const IntPoly& a_in, const IntPoly& b_in) {
    if (a_in.is_zero() || b_in.is_zero()) return 0;
    IntPoly A = a_in, B = b_in;
    int s = 1;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
    }
    if (B.degree() == 0) return Integer(s) * int_pow(B.lc(), A.degree());

    Integer ca = A.content(), cb = B.content();
    A = A.primitive_part();
    B = B.primitive_part();
    Integer t = Integer(s) * int_pow(ca, B.degree()) * int_pow(cb, A.degree());

    Integer g = 1, h = 1;
    while (true) {
        int delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) t = -t;
        IntPoly R = pseudo_rem(A, B);
        A = B;
        // B <- R / (g h^delta), exact by the subresultant theory
        Integer div = g * int_pow(h, delta);
        std::vector<Integer> coeffs = R.coeffs();
        for (auto& c : coeffs) c /= div;
        B = IntPoly(std::move(coeffs));
        if (B.is_zero()) return 0;
        g = A.lc();
        if (delta > 0) h = int_pow(g, delta) / int_pow(h, delta - 1);
        if (B.degree() == 0) break;
    }
    // res(A, B) with deg B == 0: h^(1-degA) lc(B)^degA
    return t * int_pow(B.lc(), A.degree()) / int_pow(h, A.degree() - 1);
}

Integer discriminant_resultant(const IntPoly& p) {
    int d = p.degree();
    if (d < 2) throw DomainError("discriminant_resultant: degree must be >= 2");
    if (!p.is_monic()) throw DomainError("discriminant_resultant: polynomial must be monic");
    Integer r = resultant(p, p.derivative());
    return (d * (d - 1) / 2) % 2 ? -r : r;
}

IntPoly gcd_Z(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    if (a.is_zero()) return b.lc() < 0 ? (-b).primitive_part() : b.primitive_part();
    if (b.is_zero()) return a.lc() < 0 ? (-a).primitive_part() : a.primitive_part();
    Integer cont = gcd(a.content(), b.content());
    IntPoly A = a.primitive_part(), B = b.primitive_part();
    if (A.degree() < B.degree()) std::swap(A, B);
    while (!B.is_zero()) {
        IntPoly R = pseudo_rem(A, B).primitive_part();
        A = B;
        B = R;
    }
    if (A.lc() < 0) A = -A;
    return cont * A;
}

std::vector<Integer> integer_roots(const IntPoly& p) {
    if (p.is_zero()) throw DomainError("integer_roots: zero polynomial");
    std::vector<Integer> roots;
    // strip x^v
    int v = 0;
    while (p.coeff(v) == 0) ++v;
    if (v > 0) roots.push_back(0);
    const Integer& c0 = p.coeff(v);
    if (p.degree() > v) {
        // divisors of the trailing coefficient, both signs, verified exactly
        std::vector<Integer> divs{1};
        for (const auto& pp : factorize(c0).factors) {
            size_t n = divs.size();
            Integer q = 1;
            for (unsigned e = 1; e <= pp.exponent; ++e) {
                q *= pp.prime;
                for (size_t i = 0; i < n; ++i) divs.push_back(divs[i] * q);
            }
        }
        for (const auto& d : divs) {
            if (p.eval(d) == 0) roots.push_back(d);
            if (p.eval(-d) == 0) roots.push_back(-d);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

bool is_irreducible_Q(const IntPoly& p) { return factor_over_Z(p).size() == 1; }

} // namespace sextic
