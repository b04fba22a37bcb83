#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace watermelon {

using Int = mpz_class;
using Rational = mpq_class;

// Bad input: parity, ranges, kappa outside a formula's domain.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An infinite series did not settle within its term budget.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Something that must hold mathematically did not (non-integral count,
// inexact division, ...). Always a bug in a route, never user error.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

Int factorial(long m);
// 1/m!, zero for negative m
Rational inv_factorial(long m);

Int binom_nat(long m, long k);
Int binom_gen(long m, long k);
Rational pochhammer(const Rational& alpha, long k);
Int rising(long a, long k);

// Make a reduced rational from p/q, q != 0.
Rational make_rational(const Int& p, const Int& q);
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);

class ContactPolynomial {
public:
    ContactPolynomial() = default;
    explicit ContactPolynomial(std::vector<Int> coeffs);
    static ContactPolynomial constant(const Int& c);
    static ContactPolynomial monomial(const Int& c, long exponent);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    long valuation() const;                                             // -1 for zero
    Int coeff(long k) const;
    const std::vector<Int>& coeffs() const { return c_; }
    std::map<long, Int> sparse() const;

    bool all_nonnegative() const;

    ContactPolynomial& operator+=(const ContactPolynomial& o);
    ContactPolynomial& operator-=(const ContactPolynomial& o);
    ContactPolynomial& operator*=(const ContactPolynomial& o);
    void add_term(long k, const Int& v);

    friend ContactPolynomial operator+(ContactPolynomial a, const ContactPolynomial& b) { return a += b; }
    friend ContactPolynomial operator-(ContactPolynomial a, const ContactPolynomial& b) { return a -= b; }
    friend ContactPolynomial operator*(ContactPolynomial a, const ContactPolynomial& b) { return a *= b; }
    ContactPolynomial operator-() const;
    friend bool operator==(const ContactPolynomial& a, const ContactPolynomial& b) { return a.c_ == b.c_; }

    ContactPolynomial derivative() const;

private:
    void trim();
    std::vector<Int> c_;
};

ContactPolynomial poly_add(const ContactPolynomial& a, const ContactPolynomial& b);
ContactPolynomial poly_mul(const ContactPolynomial& a, const ContactPolynomial& b);
ContactPolynomial poly_scale(const ContactPolynomial& p, const Int& s);
Rational poly_eval(const ContactPolynomial& p, const Rational& kappa);
double poly_eval(const ContactPolynomial& p, double kappa);
ContactPolynomial poly_divide_exact_by_kappa_power(const ContactPolynomial& p, long m);
// a / b in Z[kappa]; throws InternalError when b does not divide a.
ContactPolynomial poly_divide_exact(const ContactPolynomial& a, const ContactPolynomial& b);

std::string to_string(const ContactPolynomial& p);

struct WalkerSpec {
    int n = 1;
    int t = 0;
    std::vector<int> a;
    std::vector<int> e;

    void validate() const;
};

struct WatermelonSpec {
    int n = 1;
    int t = 0;
    int y = 0;

    void validate() const;
    WalkerSpec walkers() const;
    int T() const { return (t + y) / 2; }
    int D() const { return (t - y) / 2; }
};

// natural log of |z|, usable far beyond double range
double log_abs(const Int& z);
double log_abs(const Rational& q);

}  // namespace watermelon
