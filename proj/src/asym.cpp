#include "watermelon/asym.hpp"

#include "watermelon/formulas.hpp"

#include <cmath>
#include <numbers>

namespace watermelon {

namespace {

double lf(double m) { return std::lgamma(m + 1.0); }

constexpr double kLn2 = std::numbers::ln2;
const double kLnPi = std::log(std::numbers::pi);

double log_product_tail(long y, long n, long upto)
{
    double s = 0;
    for (long i = 0; i <= upto; ++i) s += lf(i) + lf(y + n + i - 1) - lf(y + 2 * i);
    return s;
}

// sum_h binom(n,h) binom(y+h-2,h) / binom(2n,h) * weight(h) / (2-kappa)^(2n-h+extra)
double subcritical_sum(long y, long n, double kappa, bool weighted)
{
    double s = 0;
    for (long h = 0; h <= n; ++h) {
        double c = binom_nat(n, h).get_d() * binom_gen(y + h - 2, h).get_d() / binom_nat(2 * n, h).get_d();
        if (weighted) c *= static_cast<double>(2 * n - h) / std::pow(2 - kappa, 2 * n - h + 1);
        else c /= std::pow(2 - kappa, 2 * n - h);
        s += c;
    }
    return s;
}

}  // namespace

Regime regime_of(double kappa)
{
    if (kappa < 2) return Regime::subcritical;
    if (kappa == 2) return Regime::critical;
    return Regime::supercritical;
}

std::string to_string(Regime r)
{
    switch (r) {
    case Regime::subcritical: return "subcritical";
    case Regime::critical: return "critical";
    case Regime::supercritical: return "supercritical";
    }
    return "?";
}

AsymptoticEstimate z_asym_leading(long t, long y, long n, double kappa)
{
    if (!(kappa > 0)) throw DomainError("kappa must be positive");
    if (t < 1 || n < 1 || y < 0) throw DomainError("need t >= 1, n >= 1, y >= 0");
    AsymptoticEstimate a;
    a.regime = regime_of(kappa);
    double log_growth = 0;
    switch (a.regime) {
    case Regime::subcritical: {
        log_growth = n * kLn2;
        a.critical_exponent = n * (2.0 * n + 1) / 2;
        double s = subcritical_sum(y, n, kappa, false);
        if (!(s > 0)) throw InternalError("subcritical amplitude is not positive");
        a.log_constant = (2.0 * n * n - n / 2.0 + 1) * kLn2 + std::log(kappa) - n / 2.0 * kLnPi + lf(2 * n - 1) +
                         log_product_tail(y, n, n - 2) + std::log(s);
        break;
    }
    case Regime::critical:
        log_growth = n * kLn2;
        a.critical_exponent = n * (2.0 * n - 1) / 2;
        a.log_constant = (2.0 * n * n - 1.5 * n + 1) * kLn2 - n / 2.0 * kLnPi + log_product_tail(y, n, n - 1);
        break;
    case Regime::supercritical:
        log_growth = (n - 1) * kLn2 + std::log(kappa) - 0.5 * std::log(kappa - 1);
        a.critical_exponent = (n - 1) * (2.0 * n - 1) / 2;
        a.log_constant = (n - 1) * (4.0 * n - 5) / 2 * kLn2 + std::log(kappa) + (2 * n - 1) * std::log(kappa - 2) -
                         (n - 1) / 2.0 * kLnPi - (y / 2.0 + 2 * n - 1) * std::log(kappa - 1) + log_product_tail(y, n, n - 2);
        break;
    }
    a.growth_rate = std::exp(log_growth);
    a.constant = std::exp(a.log_constant);
    a.log_value = a.log_constant + t * log_growth - a.critical_exponent * std::log(static_cast<double>(t));
    a.value = std::exp(a.log_value);
    return a;
}

double mean_asym(long t, long y, long n, double kappa)
{
    if (!(kappa > 0)) throw DomainError("kappa must be positive");
    switch (regime_of(kappa)) {
    case Regime::subcritical:
        return 1 + kappa * subcritical_sum(y, n, kappa, true) / subcritical_sum(y, n, kappa, false);
    case Regime::critical:
        return std::pow(2.0, 0.5 - 2 * n) * n * binom_nat(2 * n, n).get_d() * std::sqrt(std::numbers::pi * t) - 2 * n - y + 2;
    case Regime::supercritical:
        return (kappa - 2) / (kappa - 1) * t / 2 + kappa * ((2 - kappa) * y + 4 * n - 2) / (2 * (kappa - 1) * (kappa - 2)) + 1;
    }
    return 0;
}

double log_exact_partition(long t, long y, long n, const Rational& kappa)
{
    if (kappa == 1) return log_abs(z_kappa1(t, y, n));
    if (kappa == 2) return log_abs(z_kappa2(t, y, n));
    return log_abs(poly_eval(z_thm8(t, y, n), kappa));
}

ConvergenceReport convergence_report(long y, long n, double kappa, const std::vector<long>& t_values)
{
    ConvergenceReport rep;
    for (long t : t_values) {
        if ((t - y) % 2 || t < y) throw DomainError("t values must be >= y with the parity of y");
        ConvergenceRow row;
        row.t = t;
        row.log_exact = log_exact_partition(t, y, n, Rational(kappa));
        row.log_asym = z_asym_leading(t, y, n, kappa).log_value;
        row.ratio_minus_one = std::expm1(row.log_exact - row.log_asym);
        if (!rep.rows.empty() && std::fabs(row.ratio_minus_one) >= std::fabs(rep.rows.back().ratio_minus_one))
            rep.shrinking = false;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace watermelon
