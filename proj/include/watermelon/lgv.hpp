#pragma once

#include "watermelon/core.hpp"
#include "watermelon/matrix.hpp"

namespace watermelon {

using PolyMatrix = Matrix<ContactPolynomial>;
using IntMatrix = Matrix<Int>;

ContactPolynomial det_polynomial(const PolyMatrix& m);

ContactPolynomial z_det_general(const WalkerSpec& spec);
ContactPolynomial z_det_watermelon(long t, long y, long n);
ContactPolynomial z_det_deviation0(long r, long n);

// C(r; kappa), the single-walker zero-deviation polynomial used in the Hankel route
ContactPolynomial hankel_entry(long r);

Int n_fixed_contacts(long t, long y, long n, long l);
Int det_6_1(long t, long y, long n, long l);

}  // namespace watermelon
