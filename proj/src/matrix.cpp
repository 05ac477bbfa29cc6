#include "hodge/matrix.hpp"

#include <utility>

#include "hodge/errors.hpp"

namespace hodge {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_ints(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw Error("ShapeMismatch", "ragged integer rows");
        std::size_t j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error("ShapeMismatch", "row length differs from column count");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = 1;
    return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

Vec Matrix::col(std::size_t j) const {
    Vec v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_real() const {
    for (const auto& x : a_)
        if (!x.is_real()) return false;
    return true;
}

static void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("ShapeMismatch", "matrix shapes differ");
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix m = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) += b(i, j);
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix m = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) -= b(i, j);
    return m;
}

Matrix operator-(const Matrix& a) {
    Matrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = -a(i, j);
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error("ShapeMismatch", "matrix product shapes differ");
    Matrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Gq& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Gq& y = b(k, j);
                if (y.is_zero()) continue;
                m(i, j) += x * y;
            }
        }
    return m;
}

Matrix operator*(const Gq& s, const Matrix& a) {
    Matrix m = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!m(i, j).is_zero()) m(i, j) *= s;
    return m;
}

Vec operator*(const Matrix& a, const Vec& v) {
    if (a.cols() != v.size()) throw Error("ShapeMismatch", "matrix-vector shapes differ");
    Vec out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix m(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(j, i) = a(i, j);
    return m;
}

Matrix conj(const Matrix& a) {
    Matrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).conj();
    return m;
}

Matrix adjoint(const Matrix& a) { return conj(transpose(a)); }

Matrix power(const Matrix& a, unsigned k) {
    Matrix m = Matrix::identity(a.rows());
    for (unsigned i = 0; i < k; ++i) m = m * a;
    return m;
}

Matrix bracket(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Gq trace(const Matrix& a) {
    Gq t;
    for (std::size_t i = 0; i < a.rows() && i < a.cols(); ++i) t += a(i, i);
    return t;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw Error("ShapeMismatch", "vstack column counts differ");
    Matrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

Matrix select_rows(const Matrix& a, const std::vector<std::size_t>& idx) {
    Matrix m(idx.size(), a.cols());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(idx[i], j);
    return m;
}

Gq bilinear(const Vec& u, const Matrix& m, const Vec& v) {
    Gq s;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        Gq row;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!m(i, j).is_zero() && !v[j].is_zero()) row += m(i, j) * v[j];
        if (!row.is_zero()) s += u[i] * row;
    }
    return s;
}

Vec conj(const Vec& v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].conj();
    return out;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Matrix rref(const Matrix& input, std::vector<std::size_t>* pivots) {
    Matrix m = input;
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        if (!m(r, c).is_one()) {
            Gq inv = Gq(1) / m(r, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!m(r, j).is_zero()) m(r, j) *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Gq f = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    Matrix out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = std::move(m(i, j));
    if (pivots) *pivots = std::move(piv);
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rows(); }

Gq det(const Matrix& input) {
    if (!input.is_square()) throw Error("ShapeMismatch", "determinant of non-square matrix");
    Matrix m = input;
    std::size_t n = m.rows();
    Gq d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Gq(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        Gq inv = Gq(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            Gq f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw Error("ShapeMismatch", "inverse of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return Matrix();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<std::size_t> piv;
    Matrix r = rref(aug, &piv);
    if (r.rows() < n || piv[n - 1] != n - 1) throw Error("Singular", "matrix is not invertible");
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = r(i, n + j);
    return out;
}

std::size_t nilpotency_index(const Matrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return 0;
    Matrix p = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        p = p * m;
        if (p.is_zero()) return k;
    }
    return 0;
}

bool is_nilpotent(const Matrix& m) { return m.rows() == 0 || nilpotency_index(m) > 0; }

Matrix nilpotent_exp(const Matrix& n, const Gq& z) {
    if (!n.is_square()) throw Error("ShapeMismatch", "exponential of non-square matrix");
    if (!is_nilpotent(n)) throw Error("NotNilpotent", "N^dim is not zero");
    std::size_t d = n.rows();
    Matrix out = Matrix::identity(d);
    Matrix term = Matrix::identity(d);
    for (std::size_t k = 1; k <= d; ++k) {
        term = (z / Gq(static_cast<long>(k))) * (term * n);
        if (term.is_zero()) break;
        out = out + term;
    }
    return out;
}

std::size_t hermitian_pd_failing_minor(const Matrix& h) {
    if (!h.is_square() || adjoint(h) != h) throw Error("NotHermitian", "matrix is not Hermitian");
    Matrix m = h;
    std::size_t n = m.rows();
    for (std::size_t k = 0; k < n; ++k) {
        // The k-th pivot is the ratio of consecutive leading minors and is real.
        const Gq& piv = m(k, k);
        if (!piv.is_real() || sgn(piv.re()) <= 0) return k + 1;
        Gq inv = Gq(1) / piv;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            Gq f = m(i, k) * inv;
            for (std::size_t j = k; j < n; ++j)
                if (!m(k, j).is_zero()) m(i, j) -= f * m(k, j);
        }
    }
    return 0;
}

bool hermitian_pd(const Matrix& h) { return hermitian_pd_failing_minor(h) == 0; }

Coordinates::Coordinates(const Matrix& rows) : rows_(rows) {
    Matrix r = rref(rows, &pivots_);
    if (r.rows() != rows.rows()) throw Error("Dependent", "coordinate rows are linearly dependent");
    Matrix sub(rows.rows(), rows.rows());
    for (std::size_t i = 0; i < rows.rows(); ++i)
        for (std::size_t j = 0; j < pivots_.size(); ++j) sub(i, j) = rows(i, pivots_[j]);
    pinv_ = inverse(sub);
}

bool Coordinates::solve(const Vec& v, Vec& coeffs) const {
    std::size_t m = rows_.rows();
    coeffs.assign(m, Gq());
    for (std::size_t j = 0; j < m; ++j) {
        const Gq& x = v[pivots_[j]];
        if (x.is_zero()) continue;
        for (std::size_t i = 0; i < m; ++i)
            if (!pinv_(j, i).is_zero()) coeffs[i] += x * pinv_(j, i);
    }
    return combine(coeffs) == v;
}

Vec Coordinates::coords(const Vec& v) const {
    Vec c;
    if (!solve(v, c)) throw Error("NotInSpan", "vector is not in the span of the coordinate rows");
    return c;
}

Vec Coordinates::combine(const Vec& coeffs) const {
    Vec out(rows_.cols());
    for (std::size_t i = 0; i < rows_.rows(); ++i) {
        if (coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < rows_.cols(); ++j)
            if (!rows_(i, j).is_zero()) out[j] += coeffs[i] * rows_(i, j);
    }
    return out;
}

}  // namespace hodge
