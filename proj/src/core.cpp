#include "watermelon/core.hpp"

#include <cmath>
#include <sstream>

namespace watermelon {

Int factorial(long m)
{
    if (m < 0) throw DomainError("factorial of negative integer " + std::to_string(m));
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
    return r;
}

Rational inv_factorial(long m)
{
    if (m < 0) return Rational(0);
    return Rational(Int(1), factorial(m));
}

Int binom_nat(long m, long k)
{
    if (m < 0 || k < 0 || k > m) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
    return r;
}

Int binom_gen(long m, long k)
{
    if (k < 0) return 0;
    // GMP already uses the falling-factorial extension for negative m
    Int r;
    Int mm = m;
    mpz_bin_ui(r.get_mpz_t(), mm.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Rational pochhammer(const Rational& alpha, long k)
{
    if (k < 0) throw DomainError("pochhammer with negative length");
    Rational r = 1;
    Rational a = alpha;
    for (long i = 0; i < k; ++i) {
        r *= a;
        a += 1;
    }
    return r;
}

Int rising(long a, long k)
{
    Int r = 1;
    for (long i = 0; i < k; ++i) r *= a + i;
    return r;
}

Rational make_rational(const Int& p, const Int& q)
{
    if (q == 0) throw DomainError("zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return make_rational(Int(s), 1);
        return make_rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw DomainError("not a rational number: '" + s + "'");
    }
}

std::string to_string(const Rational& r)
{
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

ContactPolynomial::ContactPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

ContactPolynomial ContactPolynomial::constant(const Int& c) { return ContactPolynomial({c}); }

ContactPolynomial ContactPolynomial::monomial(const Int& c, long exponent)
{
    ContactPolynomial p;
    p.add_term(exponent, c);
    return p;
}

void ContactPolynomial::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

long ContactPolynomial::valuation() const
{
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<long>(i);
    return -1;
}

Int ContactPolynomial::coeff(long k) const
{
    if (k < 0 || k >= static_cast<long>(c_.size())) return 0;
    return c_[k];
}

std::map<long, Int> ContactPolynomial::sparse() const
{
    std::map<long, Int> m;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) m.emplace(static_cast<long>(i), c_[i]);
    return m;
}

bool ContactPolynomial::all_nonnegative() const
{
    for (const auto& v : c_)
        if (sgn(v) < 0) return false;
    return true;
}

void ContactPolynomial::add_term(long k, const Int& v)
{
    if (k < 0) throw DomainError("negative exponent in contact polynomial");
    if (v == 0) return;
    if (k >= static_cast<long>(c_.size())) c_.resize(k + 1);
    c_[k] += v;
    trim();
}

ContactPolynomial& ContactPolynomial::operator+=(const ContactPolynomial& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

ContactPolynomial& ContactPolynomial::operator-=(const ContactPolynomial& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

ContactPolynomial& ContactPolynomial::operator*=(const ContactPolynomial& o)
{
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Int> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

ContactPolynomial ContactPolynomial::operator-() const
{
    ContactPolynomial r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

ContactPolynomial ContactPolynomial::derivative() const
{
    std::vector<Int> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
    return ContactPolynomial(std::move(d));
}

ContactPolynomial poly_add(const ContactPolynomial& a, const ContactPolynomial& b) { return a + b; }
ContactPolynomial poly_mul(const ContactPolynomial& a, const ContactPolynomial& b) { return a * b; }

ContactPolynomial poly_scale(const ContactPolynomial& p, const Int& s)
{
    std::vector<Int> c = p.coeffs();
    for (auto& v : c) v *= s;
    return ContactPolynomial(std::move(c));
}

Rational poly_eval(const ContactPolynomial& p, const Rational& kappa)
{
    // Horner on numerator with a running denominator power keeps everything integral
    const auto& c = p.coeffs();
    Int num = 0, den_pow = 1;
    const Int& pn = kappa.get_num();
    const Int& pd = kappa.get_den();
    for (long i = p.degree(); i >= 0; --i) {
        num = num * pn + c[i] * den_pow;
        den_pow *= pd;
    }
    if (p.is_zero()) return 0;
    // den_pow went one step too far
    return make_rational(num, den_pow / pd);
}

double poly_eval(const ContactPolynomial& p, double kappa)
{
    const auto& c = p.coeffs();
    double v = 0;
    for (long i = p.degree(); i >= 0; --i) v = v * kappa + c[i].get_d();
    return v;
}

ContactPolynomial poly_divide_exact_by_kappa_power(const ContactPolynomial& p, long m)
{
    if (m < 0) throw DomainError("negative kappa power");
    if (p.is_zero()) return p;
    if (p.valuation() < m)
        throw InternalError("contact polynomial " + to_string(p) + " not divisible by kappa^" + std::to_string(m));
    const auto& c = p.coeffs();
    return ContactPolynomial(std::vector<Int>(c.begin() + m, c.end()));
}

ContactPolynomial poly_divide_exact(const ContactPolynomial& a, const ContactPolynomial& b)
{
    if (b.is_zero()) throw InternalError("polynomial division by zero");
    if (a.is_zero()) return a;
    std::vector<Int> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const long db = b.degree();
    const long da = a.degree();
    if (da < db) throw InternalError("inexact polynomial division");
    std::vector<Int> q(da - db + 1);
    for (long i = da - db; i >= 0; --i) {
        const Int& top = rem[i + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), bc[db].get_mpz_t()))
            throw InternalError("inexact polynomial division");
        Int f = top / bc[db];
        for (long j = 0; j <= db; ++j) rem[i + j] -= f * bc[j];
        q[i] = f;
    }
    for (const auto& v : rem)
        if (v != 0) throw InternalError("inexact polynomial division");
    return ContactPolynomial(std::move(q));
}

std::string to_string(const ContactPolynomial& p)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : p.sparse()) {
        if (!first) os << (sgn(v) < 0 ? " - " : " + ");
        else if (sgn(v) < 0) os << "-";
        first = false;
        Int a = abs(v);
        if (k == 0) { os << a; continue; }
        if (a != 1) os << a << "*";
        os << "k";
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

void WalkerSpec::validate() const
{
    if (n < 1) throw DomainError("need at least one walker");
    if (t < 0) throw DomainError("negative walk length");
    if (static_cast<int>(a.size()) != n || static_cast<int>(e.size()) != n)
        throw DomainError("start/end height lists must have n entries");
    for (int i = 0; i < n; ++i) {
        if (a[i] < 0 || e[i] < 0) throw DomainError("heights must be nonnegative");
        if (i > 0 && (a[i] <= a[i - 1] || e[i] <= e[i - 1]))
            throw DomainError("start and end heights must be strictly increasing");
        if ((a[i] - a[0]) % 2 || (e[i] - e[0]) % 2)
            throw DomainError("start heights (resp. end heights) must share one parity");
        if ((a[i] + e[i] + t) % 2) throw DomainError("a_i + e_i must have the parity of t");
    }
}

void WatermelonSpec::validate() const
{
    if (n < 1) throw DomainError("need at least one walker");
    if (y < 0) throw DomainError("deviation must be nonnegative");
    if (t < y) throw DomainError("need t >= y");
    if ((t - y) % 2) throw DomainError("t and y must have the same parity");
}

WalkerSpec WatermelonSpec::walkers() const
{
    validate();
    WalkerSpec w;
    w.n = n;
    w.t = t;
    for (int i = 0; i < n; ++i) {
        w.a.push_back(2 * i);
        w.e.push_back(y + 2 * i);
    }
    return w;
}

double log_abs(const Int& z)
{
    if (z == 0) return -INFINITY;
    long ex;
    double m = mpz_get_d_2exp(&ex, z.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(ex) * std::log(2.0);
}

double log_abs(const Rational& q) { return log_abs(q.get_num()) - log_abs(q.get_den()); }

}  // namespace watermelon
