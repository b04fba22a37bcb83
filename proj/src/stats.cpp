#include "watermelon/stats.hpp"

namespace watermelon {

Rational mean_contacts(const ContactPolynomial& z, const Rational& kappa)
{
    Rational m = kappa * poly_eval(z.derivative(), kappa);
    m.canonicalize();
    return m;
}

Rational normalized_mean(const ContactPolynomial& z, const Rational& kappa)
{
    Rational zv = poly_eval(z, kappa);
    if (zv == 0) throw DomainError("partition function vanishes at this kappa");
    Rational m = mean_contacts(z, kappa) / zv;
    m.canonicalize();
    return m;
}

double normalized_mean(const ContactPolynomial& z, double kappa)
{
    // Z itself overflows doubles for long walks; a double kappa converts to a rational exactly
    return normalized_mean(z, Rational(kappa)).get_d();
}

Rational mean_kappa1(long t, long y, long n)
{
    WatermelonSpec{static_cast<int>(n), static_cast<int>(t), static_cast<int>(y)}.validate();
    Rational m = 1 + make_rational(Int(n * (y + 2 * n + 1) * (t - y)), Int((y + n) * (t + y + 4 * n)));
    m.canonicalize();
    return m;
}

Rational mean_kappa2_y0(long r, long n)
{
    if (r < 1 || n < 1) throw DomainError("mean_kappa2_y0 needs r, n >= 1");
    Int pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(2 * r - 1));
    Rational m = make_rational(pow2 * n * binom_nat(2 * n, n), binom_nat(2 * r + 2 * n - 2, r + n - 1)) - 2 * (n - 1);
    m.canonicalize();
    return m;
}

}  // namespace watermelon
