#pragma once

#include "watermelon/core.hpp"

#include <cstddef>

namespace watermelon {

ContactPolynomial z_thm4(long r, long n);
ContactPolynomial z_thm8(long t, long y, long n);

struct Thm9Result {
    std::vector<Int> h_coeffs;  // coefficient of kappa (kappa - 1)^h
    ContactPolynomial assembled;
};
Thm9Result z_thm9(long t, long y, long n);

Int z_kappa1(long t, long y, long n);
Int z_kappa2(long t, long y, long n);

// lower end of the kappa range where the series forms converge: 2(sqrt 2 - 1)
double series_kappa_min();

struct SeriesValue {
    double value = 0;
    std::size_t terms = 0;  // terms of the infinite series actually summed
};

inline constexpr std::size_t kSeriesTermCap = 1000000;

SeriesValue z_cor5_detail(long r, long n, double kappa, double rel_tol);
SeriesValue z_thm11_detail(long t, long y, long n, double kappa, double rel_tol);
double z_cor5(long r, long n, double kappa, double rel_tol);
double z_thm11(long t, long y, long n, double kappa, double rel_tol);

}  // namespace watermelon
