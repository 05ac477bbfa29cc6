#include "hodge/g2.hpp"

#include "hodge/errors.hpp"

namespace hodge {

namespace {

Matrix entries(std::initializer_list<std::tuple<std::size_t, std::size_t, long>> list) {
    Matrix m(7, 7);
    for (const auto& [dst, src, v] : list) m(dst, src) = v;
    return m;
}

Vec flatten(const Matrix& m) {
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

Matrix unflatten(const Vec& v, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
    return m;
}

G2Realization build() {
    G2Realization g;
    g.F1 = entries({{1, 0, 1}, {3, 2, 1}, {4, 3, 1}, {6, 5, 1}});
    g.F2 = entries({{2, 1, 1}, {5, 4, 1}});
    g.E1 = entries({{0, 1, 1}, {2, 3, 2}, {3, 4, 2}, {5, 6, 1}});
    g.E2 = entries({{1, 2, 1}, {4, 5, 1}});
    g.Q = Matrix(7, 7);
    for (std::size_t i = 0; i < 7; ++i) g.Q(i, 6 - i) = (i % 2 == 0) ? 1 : -1;

    // Close the generators under brackets, keeping a linearly independent set.
    std::vector<Matrix> found = {g.E1, g.E2, g.F1, g.F2};
    std::vector<Vec> flat;
    for (const auto& m : found) flat.push_back(flatten(m));
    Subspace span = Subspace::span(flat, 49);
    for (std::size_t i = 0; i < found.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            Matrix b = bracket(found[i], found[j]);
            Vec fb = flatten(b);
            if (span.contains(fb)) continue;
            found.push_back(b);
            flat.push_back(fb);
            span = Subspace::span(flat, 49);
        }
    for (std::size_t i = 0; i < span.dim(); ++i) g.basis.push_back(unflatten(span.vector(i), 7));
    if (g.basis.size() != 14) throw Error("InternalError", "g2 bracket closure has wrong dimension");
    return g;
}

HodgeFiltration closed_filtration() {
    HodgeFiltration f;
    f.ambient = 7;
    f.lo = 0;
    for (int p = 0; p <= 6; ++p) {
        std::vector<Vec> rows;
        for (int idx = 0; idx <= 6 - p; ++idx) {
            Vec e(7);
            e[static_cast<std::size_t>(idx)] = 1;
            rows.push_back(e);
        }
        f.steps.push_back(Subspace::span(rows, 7));
    }
    return f;
}

}  // namespace

const G2Realization& g2_realization() {
    static const G2Realization g = build();
    return g;
}

LmhsDatum g2_closed_lmhs() {
    const auto& g = g2_realization();
    HodgeDatum d{7, 6, g.Q, closed_filtration()};
    return make_lmhs(std::move(d), g.F1 + g.F2);
}

LmhsDatum g2_open_lmhs() {
    const auto& g = g2_realization();
    Matrix n = g.F1 + g.F2;
    HodgeDatum d{7, 6, g.Q, transform(nilpotent_exp(n, Gq::i()), closed_filtration())};
    return make_lmhs(std::move(d), Matrix(7, 7));
}

}  // namespace hodge
