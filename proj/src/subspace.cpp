#include "hodge/subspace.hpp"

#include "hodge/errors.hpp"

namespace hodge {

static void require_ambient(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw Error("AmbientMismatch", "subspaces live in different spaces");
}

Subspace Subspace::span(const Matrix& rows) {
    Subspace s(rows.cols());
    s.basis_ = rref(rows);
    return s;
}

Subspace Subspace::span(const std::vector<Vec>& rows, std::size_t ambient) {
    return span(Matrix::from_rows(rows, ambient));
}

Subspace Subspace::full(std::size_t ambient) { return span(Matrix::identity(ambient)); }

bool Subspace::contains(const Vec& v) const {
    if (v.size() != n_) throw Error("AmbientMismatch", "vector length differs from ambient dimension");
    // Reduce against the echelon basis; v lies in the span iff nothing remains.
    Vec r = v;
    std::size_t col = 0;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        while (basis_(i, col).is_zero()) ++col;
        if (r[col].is_zero()) continue;
        Gq f = r[col];
        for (std::size_t j = col; j < n_; ++j)
            if (!basis_(i, j).is_zero()) r[j] -= f * basis_(i, j);
    }
    return hodge::is_zero(r);
}

Subspace kernel(const Matrix& m) {
    std::size_t n = m.cols();
    std::vector<std::size_t> piv;
    Matrix r = rref(m, &piv);
    std::vector<bool> is_piv(n, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<Vec> rows;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        Vec v(n);
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
        rows.push_back(std::move(v));
    }
    return Subspace::span(rows, n);
}

Subspace image(const Matrix& m) { return Subspace::span(transpose(m)); }

Subspace annihilator(const Subspace& a) { return kernel(a.basis()); }

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_ambient(a, b);
    if (a.is_zero() || b.is_full()) return a;
    if (b.is_zero() || a.is_full()) return b;
    if (a == b) return a;
    return kernel(vstack(annihilator(a).basis(), annihilator(b).basis()));
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require_ambient(a, b);
    if (a.is_zero() || b.is_full()) return b;
    if (b.is_zero() || a.is_full()) return a;
    return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace sum(const std::vector<Subspace>& parts, std::size_t ambient) {
    Matrix all(0, ambient);
    for (const auto& p : parts) {
        if (p.ambient() != ambient) throw Error("AmbientMismatch", "subspaces live in different spaces");
        all = vstack(all, p.basis());
    }
    return Subspace::span(all);
}

Subspace conj(const Subspace& a) {
    // Conjugating an RREF basis keeps it in RREF (pivots are 1, zeros stay 0).
    return Subspace::span(conj(a.basis()));
}

Subspace apply(const Matrix& m, const Subspace& a) {
    if (m.cols() != a.ambient()) throw Error("AmbientMismatch", "matrix does not act on the subspace");
    if (a.is_zero()) return Subspace(m.rows());
    return Subspace::span(a.basis() * transpose(m));
}

Subspace preimage(const Matrix& m, const Subspace& a) {
    if (m.rows() != a.ambient()) throw Error("AmbientMismatch", "matrix does not map into the subspace");
    // x with Mx in A  <=>  ann(A) M x = 0
    Matrix ann = annihilator(a).basis();
    if (ann.rows() == 0) return Subspace::full(m.cols());
    return kernel(ann * m);
}

bool is_subspace(const Subspace& a, const Subspace& b) {
    require_ambient(a, b);
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!b.contains(a.vector(i))) return false;
    return true;
}

Subspace complement_in(const Subspace& u, const Subspace& v) {
    require_ambient(u, v);
    std::size_t n = u.ambient();
    const Matrix& ub = u.basis();
    std::vector<std::size_t> upiv;
    for (std::size_t i = 0, c = 0; i < ub.rows(); ++i) {
        while (ub(i, c).is_zero()) ++c;
        upiv.push_back(c);
    }
    std::vector<Vec> rows;
    for (std::size_t k = 0; k < v.dim(); ++k) {
        Vec r = v.vector(k);
        for (std::size_t i = 0; i < ub.rows(); ++i) {
            if (r[upiv[i]].is_zero()) continue;
            Gq f = r[upiv[i]];
            for (std::size_t j = 0; j < n; ++j)
                if (!ub(i, j).is_zero()) r[j] -= f * ub(i, j);
        }
        if (!is_zero(r)) rows.push_back(std::move(r));
    }
    Subspace c = Subspace::span(rows, n);
    if (c.dim() + u.dim() != v.dim()) throw Error("NotContained", "complement_in requires U inside V");
    return c;
}

bool is_direct_sum_decomposition(const std::vector<Subspace>& parts, std::size_t ambient) {
    std::size_t total = 0;
    for (const auto& p : parts) total += p.dim();
    if (total != ambient) return false;
    return sum(parts, ambient).dim() == ambient;
}

}  // namespace hodge
