#include "sextic/trinomial.hpp"

#include <numeric>

namespace sextic {

namespace {

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

Trinomial::Trinomial(int k, Integer A, Integer B)
    : k_(k), A_(std::move(A)), B_(std::move(B)) {
    if (k_ != 1 && k_ != 2) throw DomainError("Trinomial: k must be 1 or 2");
    if (A_ == 0) throw DomainError("Trinomial: A must be nonzero");
    if (B_ == 0) throw DomainError("Trinomial: B must be nonzero");
}

Integer delta(const Trinomial& t) {
    return 4 * int_pow(t.A(), 3) + 27 * int_pow(t.B(), unsigned(3 - t.k()));
}

Integer swan_general(int n, int m, const Integer& A, const Integer& B) {
    if (m <= 0 || m >= n) throw DomainError("swan_general: need 0 < m < n");
    if (B == 0) throw DomainError("swan_general: B must be nonzero");
    int d = std::gcd(n, m);
    Integer inner = int_pow(Integer(n), unsigned(n / d)) * int_pow(B, unsigned((n - m) / d));
    Integer second = int_pow(Integer(n - m), unsigned((n - m) / d)) *
                     int_pow(Integer(m), unsigned(m / d)) * int_pow(A, unsigned(n / d));
    if ((n / d) % 2) inner += second;
    else inner -= second;
    Integer result = int_pow(B, unsigned(m - 1)) * int_pow(inner, unsigned(d));
    if ((Integer(n) * (n - 1) / 2) % 2 != 0) result = -result;
    return result;
}

Integer disc_f(const Trinomial& t) {
    Integer d = delta(t);
    return -64 * int_pow(t.B(), unsigned(2 * t.k() - 1)) * d * d;
}

Integer disc_g(const Trinomial& t) {
    return -int_pow(t.B(), unsigned(t.k() - 1)) * delta(t);
}

IntPoly poly_f(const Trinomial& t) {
    std::vector<Integer> c(7);
    c[0] = t.B();
    c[size_t(2 * t.k())] = t.A();
    c[6] = 1;
    return IntPoly(std::move(c));
}

AuxPolys build_aux(const Trinomial& t) {
    const int k = t.k();
    const Integer& A = t.A();
    const Integer& B = t.B();
    AuxPolys aux;
    {
        std::vector<Integer> c(4);
        c[0] = B;
        c[size_t(k)] = A;
        c[3] = 1;
        aux.g = IntPoly(std::move(c));
    }
    Integer mid = (k % 2 ? -1 : 1) * A * int_pow(B, unsigned(k - 1));
    {
        std::vector<Integer> c(4);
        c[0] = -B * B;
        c[size_t(3 - k)] = mid;
        c[3] = 1;
        aux.hhat = IntPoly(std::move(c));
    }
    aux.h = aux.hhat.inflate(2);
    {
        std::vector<Integer> c(5);
        c[0] = int_pow(A, unsigned(3 - k)) * int_pow(-4 * B, unsigned(k - 1));
        c[1] = -8 * B;
        c[2] = 2 * (k - 2) * A;
        c[4] = 1;
        aux.M = IntPoly(std::move(c));
    }
    return aux;
}

} // namespace sextic
