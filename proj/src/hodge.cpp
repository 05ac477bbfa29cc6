#include "hodge/hodge.hpp"

#include <algorithm>
#include <string>

#include "hodge/errors.hpp"

namespace hodge {

Subspace HodgeFiltration::at(int p) const {
    if (p < lo) return Subspace::full(ambient);
    auto idx = static_cast<std::size_t>(p - lo);
    if (idx >= steps.size()) return Subspace::zero(ambient);
    return steps[idx];
}

int HodgeFiltration::hi() const {
    for (std::size_t i = steps.size(); i-- > 0;)
        if (!steps[i].is_zero()) return lo + static_cast<int>(i);
    return lo - 1;
}

bool HodgeFiltration::is_decreasing() const {
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i].ambient() != ambient) return false;
        if (i + 1 < steps.size() && !is_subspace(steps[i + 1], steps[i])) return false;
    }
    return true;
}

int HodgeNumbers::total() const {
    int t = 0;
    for (int x : h) t += x;
    return t;
}

bool HodgeNumbers::symmetric() const {
    if (h.size() != static_cast<std::size_t>(n + 1)) return false;
    for (std::size_t i = 0; i < h.size(); ++i)
        if (h[i] != h[h.size() - 1 - i] || h[i] < 0) return false;
    return true;
}

Matrix gram(const Matrix& a, const Matrix& q, const Matrix& b) { return a * q * transpose(b); }

Report check_structure(const HodgeDatum& d) {
    Report r;
    std::string why;
    if (d.Q.rows() != d.dim || d.Q.cols() != d.dim)
        why = "Q must be dim x dim";
    else if (!d.Q.is_real())
        why = "Q must have real entries";
    else if (transpose(d.Q) != ((d.weight % 2 == 0) ? d.Q : -d.Q))
        why = "Q^T must equal (-1)^n Q";
    else if (det(d.Q).is_zero())
        why = "Q is degenerate";
    else if (d.F.ambient != d.dim || !d.F.is_decreasing())
        why = "F must be a decreasing filtration of V";
    else if (!d.F.at(0).is_full())
        why = "F^0 must be V";
    else if (!d.F.at(d.weight + 1).is_zero())
        why = "F^{n+1} must be zero";
    else if (d.weight < 0)
        why = "weight must be non-negative";
    r.add("structure", why.empty(), why);
    return r;
}

std::vector<Piece> hodge_decomposition(const HodgeDatum& d) {
    std::vector<Piece> out;
    for (int p = 0; p <= d.weight; ++p) {
        int q = d.weight - p;
        out.push_back({p, q, intersect(d.F.at(p), conj(d.F.at(q)))});
    }
    return out;
}

bool check_hr1(const HodgeDatum& d) {
    for (int p = 0; p <= d.weight + 1; ++p) {
        Subspace a = d.F.at(p), b = d.F.at(d.weight - p + 1);
        if (a.dim() + b.dim() != d.dim) return false;
        if (!gram(a.basis(), d.Q, b.basis()).is_zero()) return false;
        if (!sum(a, conj(b)).is_full()) return false;
    }
    return true;
}

bool check_hr2(const HodgeDatum& d) {
    if (!check_hr1(d)) throw Error("Hr1Prerequisite", "HR2 requires HR1");
    for (const auto& piece : hodge_decomposition(d)) {
        if (piece.space.is_zero()) continue;
        const Matrix& b = piece.space.basis();
        Matrix h = Gq::i_pow(piece.p - piece.q) * gram(b, d.Q, conj(b));
        if (!hermitian_pd(h)) return false;
    }
    return true;
}

Report validate_phs(const HodgeDatum& d) {
    Report r = check_structure(d);
    if (!r.ok()) {
        r.add("hr1", false, "skipped: structure invalid");
        r.add("hr2", false, "skipped: structure invalid");
        r.add("spans", false, "skipped: structure invalid");
        return r;
    }
    bool hr1 = check_hr1(d);
    r.add("hr1", hr1, hr1 ? "" : "Q(F^p, F^{n-p+1}) != 0 or F^p + conj F^{n-p+1} is not direct");
    if (hr1) {
        bool hr2 = check_hr2(d);
        r.add("hr2", hr2, hr2 ? "" : "i^{p-q} Q(v, conj v) is not positive on some V^{p,q}");
    } else {
        r.add("hr2", false, "skipped: requires HR1");
    }
    std::vector<Subspace> parts;
    for (const auto& piece : hodge_decomposition(d)) parts.push_back(piece.space);
    bool spans = is_direct_sum_decomposition(parts, d.dim);
    r.add("spans", spans, spans ? "" : "the V^{p,q} do not form a direct sum decomposition of V");
    return r;
}

HodgeNumbers hodge_numbers(const HodgeDatum& d) {
    HodgeNumbers hn;
    hn.n = d.weight;
    hn.h.assign(static_cast<std::size_t>(d.weight + 1), 0);
    for (const auto& piece : hodge_decomposition(d))
        hn.h[static_cast<std::size_t>(d.weight - piece.p)] = static_cast<int>(piece.space.dim());
    for (int p = 0; p <= d.weight + 1; ++p) {
        int f = 0;
        for (int r = p; r <= d.weight; ++r) f += hn.at(r);
        if (static_cast<std::size_t>(f) != d.F.at(p).dim())
            throw Error("InconsistentFiltration", "f^" + std::to_string(p) + " differs from the sum of h^{r,n-r}, r >= p");
    }
    return hn;
}

HodgeNumbers filtration_hodge_numbers(const HodgeFiltration& f, int n) {
    HodgeNumbers hn;
    hn.n = n;
    for (int p = n; p >= 0; --p) hn.h.push_back(static_cast<int>(f.at(p).dim() - f.at(p + 1).dim()));
    return hn;
}

HodgeDatum model_phs(const HodgeNumbers& hn) {
    if (!hn.symmetric() || hn.total() <= 0)
        throw Error("InadmissibleHodgeNumbers", "Hodge numbers must be symmetric, non-negative, with positive total");
    const int n = hn.n;
    const auto dim = static_cast<std::size_t>(hn.total());
    HodgeDatum d;
    d.dim = dim;
    d.weight = n;
    d.Q = Matrix(dim, dim);
    // (label p, vector) generating the filtration
    std::vector<std::pair<int, Vec>> gens;
    std::size_t k = 0;
    for (int p = n; 2 * p > n; --p) {
        int q = n - p;
        for (int a = 0; a < hn.at(p); ++a) {
            std::size_t e = k++, f = k++;
            if (n % 2 == 0) {
                long c = ((p - q) / 2) % 2 == 0 ? 1 : -1;
                d.Q(e, e) = c;
                d.Q(f, f) = c;
            } else {
                long s = ((p - q - 1) / 2) % 2 == 0 ? 1 : -1;
                d.Q(e, f) = s;
                d.Q(f, e) = -s;
            }
            Vec u(dim), ubar(dim);
            u[e] = 1;
            u[f] = Gq::i();
            ubar[e] = 1;
            ubar[f] = -Gq::i();
            gens.emplace_back(p, u);
            gens.emplace_back(q, ubar);
        }
    }
    if (n % 2 == 0) {
        for (int a = 0; a < hn.at(n / 2); ++a) {
            std::size_t e = k++;
            d.Q(e, e) = 1;
            Vec u(dim);
            u[e] = 1;
            gens.emplace_back(n / 2, u);
        }
    }
    d.F.ambient = dim;
    d.F.lo = 0;
    for (int p = 0; p <= n; ++p) {
        std::vector<Vec> rows;
        for (const auto& [label, v] : gens)
            if (label >= p) rows.push_back(v);
        d.F.steps.push_back(Subspace::span(rows, dim));
    }
    return d;
}

HodgeFiltration transform(const Matrix& g, const HodgeFiltration& f) {
    HodgeFiltration out;
    out.ambient = g.rows();
    out.lo = f.lo;
    for (const auto& s : f.steps) out.steps.push_back(apply(g, s));
    return out;
}

Subspace embed(const Subspace& s, std::size_t total, std::size_t offset) {
    Matrix m(s.dim(), total);
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.ambient(); ++j) m(i, offset + j) = s.basis()(i, j);
    return Subspace::span(m);
}

HodgeFiltration direct_sum(const HodgeFiltration& a, const HodgeFiltration& b) {
    HodgeFiltration out;
    out.ambient = a.ambient + b.ambient;
    out.lo = std::min(a.lo, b.lo);
    int top = std::max(a.lo + static_cast<int>(a.steps.size()), b.lo + static_cast<int>(b.steps.size()));
    for (int p = out.lo; p < top; ++p)
        out.steps.push_back(sum(embed(a.at(p), out.ambient, 0), embed(b.at(p), out.ambient, a.ambient)));
    return out;
}

}  // namespace hodge
