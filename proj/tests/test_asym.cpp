#include "helpers.hpp"
#include "watermelon/asym.hpp"
#include "watermelon/formulas.hpp"
#include "watermelon/stats.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace watermelon;

TEST_CASE("regimes split at kappa = 2")
{
    CHECK(regime_of(1.999) == Regime::subcritical);
    CHECK(regime_of(2.0) == Regime::critical);
    CHECK(regime_of(2.001) == Regime::supercritical);
    CHECK_THROWS_AS(z_asym_leading(10, 0, 1, 0.0), DomainError);
}

TEST_CASE("single walker leading terms")
{
    const double pi = std::numbers::pi;
    for (long t : {10L, 100L, 400L}) {
        double td = static_cast<double>(t);
        AsymptoticEstimate a = z_asym_leading(t, 0, 1, 1.0);
        CHECK(a.log_value == doctest::Approx(td * std::log(2.0) - 1.5 * std::log(td) + std::log(std::pow(2.0, 1.5) / std::sqrt(pi))));
        AsymptoticEstimate b = z_asym_leading(t, 0, 1, 2.0);
        CHECK(b.log_value == doctest::Approx(td * std::log(2.0) - 0.5 * std::log(td) + std::log(std::pow(2.0, 1.5) / std::sqrt(pi))));
        AsymptoticEstimate c = z_asym_leading(t, 0, 1, 3.0);
        CHECK(c.log_value == doctest::Approx(td * std::log(3.0 / std::sqrt(2.0)) + std::log(1.5)));
        CHECK(c.critical_exponent == 0.0);
    }
    AsymptoticEstimate a = z_asym_leading(20, 0, 2, 1.0);
    CHECK(a.value == doctest::Approx(a.constant * std::pow(a.growth_rate, 20) * std::pow(20.0, -a.critical_exponent)));
}

TEST_CASE("asymptotic means")
{
    CHECK(mean_asym(1000, 0, 1, 1.0) == doctest::Approx(4.0));
    CHECK(mean_asym(1000, 0, 1, 2.0) == doctest::Approx(std::sqrt(std::numbers::pi * 1000 / 2)));
    CHECK(mean_asym(1000, 0, 1, 3.0) == doctest::Approx(1000.0 / 4 + 2.5));
}

TEST_CASE("subcritical mean approaches the constant")
{
    // the exact mean at kappa = 1 has a closed form; its gap to the limit is O(1/t)
    for (long n = 1; n <= 3; ++n)
        for (long y = 0; y <= 3; ++y) {
            double gap[2];
            for (int i = 0; i < 2; ++i) {
                long t = (2000L << i) + y;
                gap[i] = std::fabs(mean_kappa1(t, y, n).get_d() - mean_asym(t, y, n, 1.0));
            }
            CHECK(gap[1] < 0.05);
            CHECK(gap[0] / gap[1] == doctest::Approx(2.0).epsilon(0.05));
        }
}

TEST_CASE("convergence reports shrink")
{
    ConvergenceReport r1 = convergence_report(0, 1, 1.0, {100, 200, 400});
    CHECK(r1.shrinking);
    double f = r1.rows[0].ratio_minus_one / r1.rows[1].ratio_minus_one;
    CHECK(f > 1.7);
    CHECK(f < 2.3);
    ConvergenceReport r2 = convergence_report(0, 2, 2.0, {100, 200, 400});
    CHECK(r2.shrinking);
    ConvergenceReport r3 = convergence_report(0, 2, 3.0, {50, 100, 200});
    CHECK(r3.shrinking);
    CHECK_THROWS_AS(convergence_report(1, 1, 1.0, {100}), DomainError);
}
