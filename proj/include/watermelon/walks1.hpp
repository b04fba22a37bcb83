#pragma once

#include "watermelon/core.hpp"

namespace watermelon {

Int paths_above_axis(long t, long a, long e);
ContactPolynomial z1_exact(long t, long a, long e);

// [x^r] C(x)^(m+1); m = -1 is accepted and gives [r == 0]
Int catalan_power_coeff(long m, long r);

// index t -> polynomial, for t = 0..up_to_t (inadmissible parities map to 0)
std::vector<ContactPolynomial> z1_gf(long a, long e, long up_to_t);

}  // namespace watermelon
