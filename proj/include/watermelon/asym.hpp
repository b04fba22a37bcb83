#pragma once

#include "watermelon/core.hpp"

#include <string>

namespace watermelon {

enum class Regime { subcritical, critical, supercritical };

Regime regime_of(double kappa);
std::string to_string(Regime r);

// value = constant * growth_rate^t * t^(-critical_exponent); the log fields
// stay finite when value itself overflows.
struct AsymptoticEstimate {
    Regime regime = Regime::subcritical;
    double value = 0;
    double log_value = 0;
    double growth_rate = 0;
    double critical_exponent = 0;
    double constant = 0;
    double log_constant = 0;
};

AsymptoticEstimate z_asym_leading(long t, long y, long n, double kappa);
double mean_asym(long t, long y, long n, double kappa);

struct ConvergenceRow {
    long t = 0;
    double log_exact = 0;
    double log_asym = 0;
    double ratio_minus_one = 0;  // exact / asymptotic - 1
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    bool shrinking = true;  // |ratio - 1| decreased at every step
};

// log of the exact partition function, by the cheapest exact route for this kappa
double log_exact_partition(long t, long y, long n, const Rational& kappa);

ConvergenceReport convergence_report(long y, long n, double kappa, const std::vector<long>& t_values);

}  // namespace watermelon
