#pragma once

#include "watermelon/core.hpp"

namespace watermelon {

Rational mean_contacts(const ContactPolynomial& z, const Rational& kappa);
Rational normalized_mean(const ContactPolynomial& z, const Rational& kappa);
double normalized_mean(const ContactPolynomial& z, double kappa);

Rational mean_kappa1(long t, long y, long n);
Rational mean_kappa2_y0(long r, long n);

}  // namespace watermelon
