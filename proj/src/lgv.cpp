#include "watermelon/lgv.hpp"

#include "watermelon/walks1.hpp"

#include <algorithm>

namespace watermelon {

ContactPolynomial det_polynomial(const PolyMatrix& m) { return determinant(m); }

ContactPolynomial z_det_general(const WalkerSpec& spec)
{
    spec.validate();
    if (spec.t < 1) throw DomainError("determinant route needs t >= 1");
    const std::size_t n = spec.n;
    PolyMatrix m(n, n);
    // row = end point, column = start point
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long a = spec.a[j], e = spec.e[i];
            if (std::abs(a - e) > spec.t) continue;
            m(i, j) = z1_exact(spec.t, a, e);
        }
    return det_polynomial(m);
}

ContactPolynomial z_det_watermelon(long t, long y, long n)
{
    WatermelonSpec{static_cast<int>(n), static_cast<int>(t), static_cast<int>(y)}.validate();
    if (t < 1) throw DomainError("determinant route needs t >= 1");
    const long T = (t + y) / 2, D = (t - y) / 2;
    PolyMatrix m(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            ContactPolynomial b;
            const long top = std::min(D + j - i + 1, t + 2 * j);
            for (long l = 1; l <= top; ++l)
                b.add_term(l, binom_nat(t + 2 * j - l, T + i + j - 1) - binom_nat(t + 2 * j - l, T + i + j));
            m(i, j) = b;
        }
    return poly_divide_exact_by_kappa_power(det_polynomial(m), n - 1);
}

ContactPolynomial hankel_entry(long r)
{
    ContactPolynomial c;
    for (long l = 2; l <= r + 1; ++l) c.add_term(l, binom_nat(2 * r - l, r - 1) - binom_nat(2 * r - l, r));
    return c;
}

ContactPolynomial z_det_deviation0(long r, long n)
{
    if (r < 1 || n < 1) throw DomainError("z_det_deviation0 needs r, n >= 1");
    PolyMatrix m(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m(i, j) = hankel_entry(r + i + j);
    return poly_divide_exact_by_kappa_power(det_polynomial(m), 2 * n - 2);
}

namespace {

void check_fixed_contact_args(long t, long y, long n, long l)
{
    WatermelonSpec{static_cast<int>(n), static_cast<int>(t), static_cast<int>(y)}.validate();
    if (l < 0 || l > (t - y) / 2) throw DomainError("contact index out of range");
}

// walks of m steps from height 0 to height e staying weakly above the axis
Int ballot(long m, long e)
{
    if (m < 0 || e < 0 || (m + e) % 2) return 0;
    return binom_nat(m, (m + e) / 2) - binom_nat(m, (m + e) / 2 + 1);
}

}  // namespace

Int n_fixed_contacts(long t, long y, long n, long l)
{
    check_fixed_contact_args(t, y, n, l);
    if (t == 0) return 1;
    const long T = (t + y) / 2, D = (t - y) / 2;
    Rational pref = 1;
    for (long i = 0; i < n; ++i) pref *= make_rational(factorial(t + 2 * i) * factorial(i), factorial(T + n + i - 1) * factorial(D + i));
    for (long i = 0; i + 1 < n; ++i) pref *= make_rational(factorial(y + n + i - 1), factorial(y + 2 * i));
    pref.canonicalize();
    Rational s = 0;
    for (long k = 0; k < n; ++k) {
        Rational inv_tail = inv_factorial(D + k - n - l + 1);
        if (inv_tail == 0) continue;
        Rational term((y + 2 * n + l - 2) * factorial(t + 2 * k - l - 1) * factorial(D + k),
                      factorial(t + 2 * k) * factorial(k) * factorial(n - k - 1));
        term.canonicalize();
        term *= inv_tail;
        if ((n - k - 1) % 2) s -= term;
        else s += term;
    }
    Rational v = pref * s;
    if (v.get_den() != 1) throw InternalError("fixed-contact count is not an integer");
    if (sgn(v) < 0) throw InternalError("fixed-contact count is negative");
    return v.get_num();
}

Int det_6_1(long t, long y, long n, long l)
{
    check_fixed_contact_args(t, y, n, l);
    IntMatrix m(n, n);
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j) {
            if (i < n) m(i - 1, j - 1) = ballot(t + 2 * j - 2, y + 2 * i - 2);
            else m(i - 1, j - 1) = ballot(t + 2 * j - l - 3, y + 2 * n + l - 3);
        }
    return determinant(m);
}

}  // namespace watermelon
