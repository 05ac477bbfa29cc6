#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "hodge/gq.hpp"

namespace hodge {

using Vec = std::vector<Gq>;

/**
 * @brief Dense row-major matrix over the Gaussian rationals.
 */
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    /** @brief Build from integer rows (all rows must have equal length). */
    static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
    /** @brief Matrix with a single 1 at (i, j). */
    static Matrix unit(std::size_t n, std::size_t i, std::size_t j);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }

    Gq& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Gq& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    bool is_zero() const;
    bool is_real() const;
    bool is_square() const { return r_ == c_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t r_ = 0;
    std::size_t c_ = 0;
    std::vector<Gq> a_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Gq& s, const Matrix& a);
/** @brief Matrix times column vector. */
Vec operator*(const Matrix& a, const Vec& v);

Matrix transpose(const Matrix& a);
Matrix conj(const Matrix& a);
/** @brief Conjugate transpose. */
Matrix adjoint(const Matrix& a);
Matrix power(const Matrix& a, unsigned k);
/** @brief Commutator [a, b] = ab - ba. */
Matrix bracket(const Matrix& a, const Matrix& b);
Gq trace(const Matrix& a);
Matrix vstack(const Matrix& a, const Matrix& b);
/** @brief Block diagonal sum. */
Matrix direct_sum(const Matrix& a, const Matrix& b);
/** @brief Rows of a selected by index. */
Matrix select_rows(const Matrix& a, const std::vector<std::size_t>& idx);

/** @brief Bilinear pairing u^T M v (no conjugation). */
Gq bilinear(const Vec& u, const Matrix& m, const Vec& v);
Vec conj(const Vec& v);
bool is_zero(const Vec& v);

/**
 * @brief Reduced row-echelon form with zero rows dropped.
 * @param pivots optional output of pivot column indices.
 */
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& m);
Gq det(const Matrix& m);
/** @throws Error "Singular" when not invertible. */
Matrix inverse(const Matrix& m);

/** @brief Smallest k with m^k = 0, or 0 when m is not nilpotent. */
std::size_t nilpotency_index(const Matrix& m);
bool is_nilpotent(const Matrix& m);

/**
 * @brief exp(zN) as a finite sum.
 * @throws Error "NotNilpotent" if N^dim != 0.
 */
Matrix nilpotent_exp(const Matrix& n, const Gq& z);

/**
 * @brief Sylvester test for positive definiteness of a Hermitian matrix.
 * @return 0 when positive definite, otherwise the 1-based index of the first
 *         leading principal minor that is not positive.
 * @throws Error "NotHermitian".
 */
std::size_t hermitian_pd_failing_minor(const Matrix& h);
bool hermitian_pd(const Matrix& h);

/**
 * @brief Coordinates of vectors against a fixed family of independent rows.
 *
 * Precomputes a left inverse so repeated coordinate queries are cheap.
 */
class Coordinates {
public:
    Coordinates() = default;
    /** @throws Error "Dependent" if the rows are not independent. */
    explicit Coordinates(const Matrix& rows);

    std::size_t size() const { return rows_.rows(); }
    /** @brief Returns false when v is not in the row span. */
    bool solve(const Vec& v, Vec& coeffs) const;
    /** @throws Error "NotInSpan". */
    Vec coords(const Vec& v) const;
    Vec combine(const Vec& coeffs) const;

private:
    Matrix rows_;
    std::vector<std::size_t> pivots_;
    Matrix pinv_;  // inverse of rows_ restricted to pivot columns
};

}  // namespace hodge
