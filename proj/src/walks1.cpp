#include "watermelon/walks1.hpp"

namespace watermelon {

namespace {

void check_parity(long t, long a, long e)
{
    if (t < 0 || a < 0 || e < 0) throw DomainError("negative length or height");
    if ((t + a + e) % 2) throw DomainError("a + e must have the parity of t");
}

}  // namespace

Int paths_above_axis(long t, long a, long e)
{
    check_parity(t, a, e);
    if (a < 1 || e < 1) throw DomainError("paths_above_axis needs a, e >= 1");
    return binom_nat(t, (t + a - e) / 2) - binom_nat(t, (t - a - e) / 2);
}

ContactPolynomial z1_exact(long t, long a, long e)
{
    check_parity(t, a, e);
    if (t == 0) throw DomainError("z1_exact needs t >= 1; t = 0 is the oracle base case");
    ContactPolynomial z;
    // reflection count; vanishes by itself when a or e is 0
    z.add_term(0, binom_nat(t, (t + a - e) / 2) - binom_nat(t, (t - a - e) / 2));
    const long top = (t - a - e) / 2 + 1;
    for (long l = 1; l <= top; ++l)
        z.add_term(l, binom_nat(t - l, (t + a + e - 2) / 2) - binom_nat(t - l, (t + a + e) / 2));
    return z;
}

Int catalan_power_coeff(long m, long r)
{
    if (r < 0) return 0;
    if (m < -1) throw DomainError("catalan_power_coeff needs m >= -1");
    if (m == -1) return r == 0 ? 1 : 0;
    return binom_nat(2 * r + m, r) - binom_nat(2 * r + m, r - 1);
}

std::vector<ContactPolynomial> z1_gf(long a, long e, long up_to_t)
{
    if (a < 0 || e < 0 || up_to_t < 0) throw DomainError("negative argument to z1_gf");
    if (a > e) throw DomainError("z1_gf expects a <= e (swap the endpoints)");
    std::vector<ContactPolynomial> out(up_to_t + 1);
    for (long t = 0; t <= up_to_t; ++t) {
        if ((t + a + e) % 2) continue;
        ContactPolynomial z;
        Int free = 0;
        for (long j = 0; j < a; ++j) {
            long twice = t - 2 * j - e + a;
            if (twice < 0) continue;
            free += catalan_power_coeff(2 * j + e - a, twice / 2);
        }
        z.add_term(0, free);
        for (long l = 1;; ++l) {
            long twice = t - 2 * l - a - e + 2;
            if (twice < 0) break;
            z.add_term(l, catalan_power_coeff(l + a + e - 2, twice / 2));
        }
        out[t] = z;
    }
    return out;
}

}  // namespace watermelon
