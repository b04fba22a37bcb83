#include "watermelon/formulas.hpp"

#include <cmath>
#include <functional>

namespace watermelon {

namespace {

void check_thm8_args(long t, long y, long n)
{
    WatermelonSpec{static_cast<int>(n), static_cast<int>(t), static_cast<int>(y)}.validate();
    if (t < 1 || t + y < 2) throw DomainError("closed forms need t >= 1 and t + y >= 2");
}

Int as_count(const Rational& v, const char* what)
{
    if (v.get_den() != 1) throw InternalError(std::string(what) + ": non-integral coefficient " + to_string(v));
    if (sgn(v) < 0) throw InternalError(std::string(what) + ": negative coefficient " + to_string(v));
    return v.get_num();
}

Rational fact_ratio(long num, long den) { return make_rational(factorial(num), factorial(den)); }

double lf(double m) { return std::lgamma(m + 1.0); }

}  // namespace

ContactPolynomial z_thm4(long r, long n)
{
    if (r < 1 || n < 1) throw DomainError("z_thm4 needs r, n >= 1");
    Int num = factorial(r - 1), den = 1;
    for (long i = 0; i < n; ++i) num *= factorial(2 * i + 1);
    for (long i = 0; i + 1 < n; ++i) num *= factorial(2 * r + 2 * i);
    for (long i = 0; i <= 2 * n - 2; ++i) den *= factorial(r + i);
    Rational pref = make_rational(num, den);
    ContactPolynomial z;
    for (long l = 0; l < r; ++l) {
        Rational c = pref * Rational(binom_nat(2 * r - l - 2, r - 1) * binom_nat(l + 2 * n - 1, l));
        z.add_term(l + 2, as_count(c, "z_thm4"));
    }
    return z;
}

ContactPolynomial z_thm8(long t, long y, long n)
{
    check_thm8_args(t, y, n);
    const long T = (t + y) / 2, D = (t - y) / 2;
    Rational pref = fact_ratio(T - 1, T + 2 * n - 2);
    for (long i = 0; i + 1 < n; ++i)
        pref *= make_rational(factorial(t + 2 * i) * factorial(i) * factorial(y + n + i - 1),
                              factorial(T + n + i - 1) * factorial(D + i) * factorial(y + 2 * i));
    // the k-dependent factors do not depend on l
    std::vector<Rational> kf(n);
    for (long k = 0; k < n; ++k) {
        kf[k] = Rational(binom_gen(y + 2 * k - 2, 2 * k) * factorial(2 * n - 2 * k - 1) * factorial(2 * k));
        kf[k] *= pochhammer(T, k) / pochhammer(D + n - k, k);
        if (k % 2) kf[k] = -kf[k];
    }
    ContactPolynomial z;
    for (long l = 0; l <= D; ++l) {
        Rational s = 0;
        for (long k = 0; k < n; ++k) {
            if (kf[k] == 0) continue;
            Int b = binom_nat(n - 1, k) * binom_nat(t - l - 1, D - l - k) * binom_nat(y + l + 2 * n - 2, 2 * n - 2 * k - 1);
            if (b == 0) continue;
            s += kf[k] * b;
        }
        z.add_term(l + 1, as_count(pref * s, "z_thm8"));
    }
    return z;
}

Thm9Result z_thm9(long t, long y, long n)
{
    check_thm8_args(t, y, n);
    const long T = (t + y) / 2, D = (t - y) / 2;
    Rational pref = 1;
    for (long i = 0; i < n; ++i) pref *= factorial(t + 2 * i) * factorial(i);
    for (long i = 0; i + 1 < n; ++i)
        pref /= make_rational(factorial(y + 2 * i) * factorial(T + n + i) * factorial(D + i + 1), factorial(y + n + i - 1));
    pref.canonicalize();
    Thm9Result res;
    for (long h = 0; h <= D; ++h) {
        Rational c = pref * make_rational(binom_nat(n + h - 1, n - 1) * (y + 2 * n + 2 * h - 1) * factorial(y + 2 * n + h - 2),
                                     factorial(y + n + h - 1) * factorial(T + 2 * n + h - 1) * factorial(D - h));
        c.canonicalize();
        res.h_coeffs.push_back(as_count(c, "z_thm9"));
    }
    // kappa (kappa - 1)^h expanded binomially
    for (long h = 0; h <= D; ++h)
        for (long j = 0; j <= h; ++j) {
            Int v = res.h_coeffs[h] * binom_nat(h, j);
            if ((h - j) % 2) v = -v;
            res.assembled.add_term(j + 1, v);
        }
    if (!res.assembled.all_nonnegative()) throw InternalError("z_thm9: assembled polynomial has a negative coefficient");
    return res;
}

Int z_kappa1(long t, long y, long n)
{
    WatermelonSpec{static_cast<int>(n), static_cast<int>(t), static_cast<int>(y)}.validate();
    const long T = (t + y) / 2, D = (t - y) / 2;
    Rational v = 1;
    for (long i = 0; i < n; ++i)
        v *= make_rational(factorial(y + n + i) * factorial(t + 2 * i) * factorial(i),
                      factorial(y + 2 * i) * factorial(T + n + i) * factorial(D + i));
    v.canonicalize();
    return as_count(v, "z_kappa1");
}

Int z_kappa2(long t, long y, long n)
{
    WatermelonSpec{static_cast<int>(n), static_cast<int>(t), static_cast<int>(y)}.validate();
    const long T = (t + y) / 2, D = (t - y) / 2;
    Rational v = 2;
    for (long i = 0; i < n; ++i)
        v *= make_rational(factorial(y + n + i - 1) * factorial(t + 2 * i) * factorial(i),
                      factorial(y + 2 * i) * factorial(T + n + i - 1) * factorial(D + i));
    v.canonicalize();
    return as_count(v, "z_kappa2");
}

double series_kappa_min() { return 2.0 * (std::sqrt(2.0) - 1.0); }

namespace {

void check_series_kappa(double kappa, double rel_tol)
{
    if (!(rel_tol > 0)) throw DomainError("rel_tol must be positive");
    if (!(kappa > series_kappa_min()))
        throw DomainError("series forms need kappa > 2(sqrt 2 - 1)");
}

// Sum of t_0 + t_1 + ... with t_0 = 1 and t_{h+1} = t_h * ratio(h).
// Stops once the geometric tail bound with modulus q drops below rel_tol of the sum.
SeriesValue geometric_tail_sum(const std::function<double(long)>& ratio, double q, double rel_tol)
{
    SeriesValue s;
    double term = 1.0;
    for (long h = 0;; ++h) {
        s.value += term;
        ++s.terms;
        if (q == 0.0) break;
        term *= ratio(h);
        if (std::fabs(term) <= rel_tol * std::fabs(s.value) * (1.0 - q) / q) break;
        if (s.terms >= kSeriesTermCap) throw ConvergenceError("series did not converge within the term cap");
    }
    return s;
}

double signed_exp(double log_abs_value, int sign) { return sign * std::exp(log_abs_value); }

}  // namespace

SeriesValue z_cor5_detail(long r, long n, double kappa, double rel_tol)
{
    if (r < 1 || n < 1) throw DomainError("z_cor5 needs r, n >= 1");
    check_series_kappa(kappa, rel_tol);
    if (kappa == 2.0) return {static_cast<double>(z_kappa2(2 * r, 0, n).get_d()), 0};

    double lpref = 0;
    for (long i = 0; i < n; ++i) lpref += lf(2 * i + 1) + lf(2 * r + 2 * i);
    for (long i = 0; i < 2 * n; ++i) lpref -= lf(r + i);

    const double x = (kappa - 1) / (kappa * kappa);
    const double q = std::fabs(4 * x);
    SeriesValue s = geometric_tail_sum(
        [&](long h) {
            double a = static_cast<double>(n + h) / (h + 1);
            return a * (2.0 * r + 2 * n - 1 + 2 * h) * (2.0 * r + 2 * n + 2 * h) / ((r + n + h) * double(r + 2 * n + h)) * x;
        },
        q, rel_tol);

    double value = signed_exp(lpref - (2 * n - 2) * std::log(kappa) + std::log(std::fabs(s.value)), s.value < 0 ? -1 : 1);
    if (kappa > 2) {
        const double lhead = lpref + std::log(kappa - 2) + (2 * r + 2 * n - 1) * std::log(kappa) -
                             (r + 2 * n - 1) * std::log(kappa - 1) + lf(r + 2 * n - 1) - lf(2 * n - 1) - lf(r + n - 1);
        const double lxbar = std::log((kappa - 1) / (kappa * kappa));  // |(1 - kappa)/kappa^2|
        for (long h = 0; h < n; ++h) {
            double l = lhead + std::log(binom_nat(n - 1, h).get_d()) + lf(r + n - h - 1) + lf(r + 2 * n - h - 2) -
                       lf(2 * r + 2 * n - 2 * h - 2) + h * lxbar;
            value += signed_exp(l, h % 2 ? -1 : 1);
        }
    }
    return {value, s.terms};
}

SeriesValue z_thm11_detail(long t, long y, long n, double kappa, double rel_tol)
{
    check_thm8_args(t, y, n);
    check_series_kappa(kappa, rel_tol);
    if (kappa == 2.0) return {z_kappa2(t, y, n).get_d(), 0};
    const long T = (t + y) / 2, D = (t - y) / 2;

    double lpref = 0;
    for (long i = 0; i + 1 < n; ++i) lpref += lf(y + n + i - 1) - lf(y + 2 * i);
    for (long i = 0; i < n; ++i) lpref += lf(t + 2 * i) + lf(i) - lf(D + i) - lf(T + n + i - 1);

    const double x = (kappa - 1) / (kappa * kappa);
    const double q = std::fabs(4 * x);
    const double lfirst = lf(y + 2 * n - 1) + lf(T + n - 1) - lf(y + n - 1) - lf(T + 2 * n - 1);
    SeriesValue s = geometric_tail_sum(
        [&](long h) {
            return double(y + 2 * n + 2 * h + 1) * (y + 2 * n + 2 * h) * (T + n + h) /
                   ((h + 1) * double(y + n + h) * (T + 2 * n + h)) * x;
        },
        q, rel_tol);
    const double lseries = lfirst + std::log(std::fabs(s.value)) - (2 * n + y - 1) * std::log(kappa);
    const int sseries = s.value < 0 ? -1 : 1;

    if (kappa < 2) return {signed_exp(lpref + std::log(2 - kappa) + lseries, sseries), s.terms};

    double value = signed_exp(lpref + std::log(kappa - 2) + lseries, sseries);
    // Finite part. (D+n-h-1)!/(n-h-1)! is read as the rising factorial (n-h)_D, so
    // besides h < n it also contributes for n + D <= h <= (t + 2n - 2)/2 (only when y >= 2).
    const double lhead = lpref + std::log(kappa - 2) + (2 * n + t - 1) * std::log(kappa) - (T + 2 * n - 1) * std::log(kappa - 1);
    const double lxbar = std::log((kappa - 1) / (kappa * kappa));
    for (long h = 0; 2 * h <= t + 2 * n - 2 && h <= T + 2 * n - 2; ++h) {
        double lrise;
        int sign = h % 2 ? -1 : 1;
        if (h < n) {
            lrise = lf(D + n - h - 1) - lf(n - h - 1);
        } else if (h >= n + D) {
            lrise = lf(h - n) - lf(h - n - D);
            if (D % 2) sign = -sign;
        } else {
            continue;
        }
        double l = lhead + lf(T + 2 * n - h - 2) + lrise - lf(h) - lf(t + 2 * n - 2 * h - 2) + h * lxbar;
        value += signed_exp(l, sign);
    }
    return {value, s.terms};
}

double z_cor5(long r, long n, double kappa, double rel_tol) { return z_cor5_detail(r, n, kappa, rel_tol).value; }

double z_thm11(long t, long y, long n, double kappa, double rel_tol) { return z_thm11_detail(t, y, n, kappa, rel_tol).value; }

}  // namespace watermelon
