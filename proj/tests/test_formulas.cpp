#include "helpers.hpp"
#include "watermelon/formulas.hpp"
#include "watermelon/lgv.hpp"
#include "watermelon/oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace watermelon;
using testing_support::poly;

TEST_CASE("closed form anchors")
{
    CHECK(z_thm4(2, 2) == poly({{2, 1}, {3, 2}}));
    CHECK(z_thm4(1, 1) == poly({{2, 1}}));
    CHECK(z_thm4(2, 1) == poly({{2, 1}, {3, 1}}));

    CHECK(z_thm8(3, 1, 1) == poly({{1, 1}, {2, 1}}));
    CHECK(z_thm8(4, 0, 2) == poly({{2, 1}, {3, 2}}));
    for (long y = 2; y <= 6; ++y) CHECK(z_thm8(y, y, 1) == poly({{1, 1}}));
    CHECK_THROWS_AS(z_thm8(0, 0, 1), DomainError);

    Thm9Result r = z_thm9(2, 0, 1);
    CHECK((r.h_coeffs == std::vector<Int>{1, 1}));
    CHECK(r.assembled == poly({{2, 1}}));
    CHECK(z_thm9(4, 0, 2).assembled == poly({{2, 1}, {3, 2}}));
    CHECK(z_thm9(5, 5, 3).h_coeffs == std::vector<Int>{1});
    CHECK(z_thm9(5, 5, 3).assembled == poly({{1, 1}}));

    CHECK(z_kappa1(4, 0, 2) == 3);
    CHECK(z_kappa1(4, 0, 1) == 2);
    CHECK(z_kappa2(4, 0, 2) == 20);
    CHECK(z_kappa2(2, 0, 1) == 4);
    for (long n = 1; n <= 4; ++n) {
        CHECK(z_kappa1(5, 5, n) == 1);
        CHECK(z_kappa2(5, 5, n) == 2);
    }
}

TEST_CASE("exact routes agree on the watermelon grid")
{
    testing_support::for_watermelons(3, 12, 4, [](int n, int t, int y) {
        ContactPolynomial o = enumerate_contact_polynomial(WatermelonSpec{n, t, y}.walkers());
        ContactPolynomial z8 = z_thm8(t, y, n);
        CHECK(z8 == o);
        Thm9Result r9 = z_thm9(t, y, n);
        CHECK(r9.assembled == o);
        for (const auto& c : r9.h_coeffs) CHECK(sgn(c) >= 0);
        CHECK(z_kappa1(t, y, n) == poly_eval(o, Rational(1)));
        CHECK(z_kappa2(t, y, n) == poly_eval(o, Rational(2)));
    });
    for (long r = 1; r <= 6; ++r)
        for (long n = 1; n <= 3; ++n) {
            CHECK(z_thm4(r, n) == z_thm8(2 * r, 0, n));
            CHECK(z_thm4(r, n) == z_det_deviation0(r, n));
        }
}

TEST_CASE("series evaluators at the documented points")
{
    CHECK(z_cor5(2, 2, 1.0, 1e-12) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(z_cor5(2, 2, 2.0, 1e-12) == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(z_cor5(2, 2, 3.0, 1e-10) == doctest::Approx(63.0).epsilon(1e-9));
    CHECK(z_thm11(4, 0, 2, 1.5, 1e-10) == doctest::Approx(9.0).epsilon(1e-9));
    CHECK(z_thm11(3, 1, 1, 3.0, 1e-10) == doctest::Approx(12.0).epsilon(1e-9));
    CHECK(z_thm11(4, 0, 2, 1.0, 1e-10) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(z_thm11_detail(4, 0, 2, 1.0, 1e-10).terms == 1);
}

TEST_CASE("series evaluators reject the boundary and outside")
{
    const double edge = series_kappa_min();
    CHECK_THROWS_AS(z_cor5(2, 2, edge, 1e-10), DomainError);
    CHECK_THROWS_AS(z_thm11(4, 0, 2, 0.5, 1e-10), DomainError);
    CHECK_THROWS_AS(z_thm11(4, 0, 2, 1.5, 0.0), DomainError);
}

TEST_CASE("series evaluators match exact values off the anchors")
{
    for (double kappa : {0.9, 1.0, 1.5, 2.5, 3.0, 10.0})
        testing_support::for_watermelons(2, 10, 4, [&](int n, int t, int y) {
            double exact = poly_eval(z_thm8(t, y, n), Rational(kappa)).get_d();
            CHECK(std::fabs(z_thm11(t, y, n, kappa, 1e-12) / exact - 1) < 1e-9);
            if (y == 0) CHECK(std::fabs(z_cor5(t / 2, n, kappa, 1e-12) / exact - 1) < 1e-9);
        });
}

TEST_CASE("large-kappa finite part needs the terms past h = n when y >= 2")
{
    // n = 1, y = 2, t = 2: Z = kappa, and the extra term is kappa (kappa-2)/(kappa-1)^2
    const double k = 3.0;
    CHECK(z_thm11(2, 2, 1, k, 1e-12) == doctest::Approx(3.0).epsilon(1e-12));
}
