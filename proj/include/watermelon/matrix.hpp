#pragma once

#include "watermelon/core.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace watermelon {

// Small dense row-major matrix over an exact ring. The scalar only needs
// +, -, *, comparison with a zero value and an exact_div overload.
template <class Scalar>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b)
    {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix minor(std::size_t row, std::size_t col) const
    {
        Matrix m(rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
            if (i == row) continue;
            for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
                if (j == col) continue;
                m(mi, mj++) = (*this)(i, j);
            }
            ++mi;
        }
        return m;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

inline Int exact_div(const Int& a, const Int& b)
{
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw InternalError("inexact integer division");
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline ContactPolynomial exact_div(const ContactPolynomial& a, const ContactPolynomial& b)
{
    return poly_divide_exact(a, b);
}

inline bool is_zero_scalar(const Int& v) { return v == 0; }
inline bool is_zero_scalar(const ContactPolynomial& v) { return v.is_zero(); }

template <class Scalar>
Scalar ring_one();
template <>
inline Int ring_one<Int>() { return 1; }
template <>
inline ContactPolynomial ring_one<ContactPolynomial>() { return ContactPolynomial::constant(1); }

// cofactor expansion along the first row
template <class Scalar>
Scalar det_laplace(const Matrix<Scalar>& m)
{
    const std::size_t n = m.rows();
    if (n != m.cols()) throw DomainError("determinant of a non-square matrix");
    if (n == 0) return ring_one<Scalar>();
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    Scalar acc{};
    for (std::size_t j = 0; j < n; ++j) {
        if (is_zero_scalar(m(0, j))) continue;
        Scalar term = m(0, j) * det_laplace(m.minor(0, j));
        if (j % 2) acc = acc - term;
        else acc = acc + term;
    }
    return acc;
}

// fraction-free elimination; every division is exact in an integral domain
template <class Scalar>
Scalar det_bareiss(Matrix<Scalar> m)
{
    const std::size_t n = m.rows();
    if (n != m.cols()) throw DomainError("determinant of a non-square matrix");
    if (n == 0) return ring_one<Scalar>();
    bool negate = false;
    Scalar prev = ring_one<Scalar>();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero_scalar(m(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero_scalar(m(p, k))) ++p;
            if (p == n) return Scalar{};
            m.swap_rows(k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
        prev = m(k, k);
    }
    Scalar d = m(n - 1, n - 1);
    if (negate) return Scalar{} - d;
    return d;
}

template <class Scalar>
Scalar determinant(const Matrix<Scalar>& m)
{
    return m.rows() <= 4 ? det_laplace(m) : det_bareiss(m);
}

}  // namespace watermelon
