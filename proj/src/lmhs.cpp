#include "hodge/lmhs.hpp"

#include <algorithm>
#include <string>

#include "hodge/errors.hpp"

namespace hodge {

namespace {

std::string pq(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

// Flatten a square matrix row-major.
Vec flatten(const Matrix& m) {
    Vec v(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
    return v;
}

Matrix unflatten(const Vec& v, std::size_t d) {
    Matrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = v[i * d + j];
    return m;
}

}  // namespace

Subspace WeightFiltration::at(int k) const {
    if (k < lo) return Subspace::zero(ambient);
    auto idx = static_cast<std::size_t>(k - lo);
    if (idx >= steps.size()) return Subspace::full(ambient);
    return steps[idx];
}

bool operator==(const WeightFiltration& a, const WeightFiltration& b) {
    if (a.ambient != b.ambient || a.center != b.center) return false;
    int lo = std::min(a.lo, b.lo), hi = std::max(a.hi(), b.hi());
    for (int k = lo; k <= hi; ++k)
        if (a.at(k) != b.at(k)) return false;
    return true;
}

Subspace Bigrading::at(int p, int q) const {
    for (const auto& n : nodes)
        if (n.p == p && n.q == q) return n.space;
    return Subspace::zero(ambient);
}

DimTable Bigrading::dims() const {
    DimTable t;
    for (const auto& n : nodes)
        if (n.space.dim() > 0) t[{n.p, n.q}] += static_cast<int>(n.space.dim());
    return t;
}

int epsilon(int k, PolarizationSign sign) {
    switch (sign) {
        case PolarizationSign::Positive: return 1;
        case PolarizationSign::Flipped: return -1;
        case PolarizationSign::Alternating: return ((k * (k - 1) / 2) % 2 == 0) ? 1 : -1;
    }
    return 1;
}

WeightFiltration weight_filtration(const Matrix& n, int center) {
    if (!n.is_square()) throw Error("ShapeMismatch", "N must be square");
    const std::size_t d = n.rows();
    WeightFiltration w;
    w.ambient = d;
    w.center = center;
    if (d == 0) {
        w.lo = center;
        w.steps.push_back(Subspace::zero(0));
        return w;
    }
    std::size_t idx = nilpotency_index(n);
    if (idx == 0) throw Error("NotNilpotent", "N is not nilpotent");
    const int l = static_cast<int>(idx) - 1;
    std::vector<Matrix> pw{Matrix::identity(d)};
    for (int k = 1; k <= 2 * l + 1; ++k) pw.push_back(pw.back() * n);
    std::vector<Subspace> im, ker;
    for (const auto& m : pw) {
        im.push_back(image(m));
        ker.push_back(kernel(m));
    }
    w.lo = center - l;
    for (int k = -l; k <= l; ++k) {
        Subspace acc = Subspace::zero(d);
        for (int j = std::max(0, -k); j <= l; ++j) {
            int m = j + k + 1;
            if (m < 1) continue;
            acc = sum(acc, intersect(im[static_cast<std::size_t>(j)], ker[static_cast<std::size_t>(std::min(m, 2 * l + 1))]));
        }
        w.steps.push_back(acc);
    }
    return w;
}

std::string check_weight_properties(const Matrix& n, const WeightFiltration& w) {
    const int c = w.center;
    for (int k = w.lo; k <= w.hi(); ++k)
        if (!is_subspace(apply(n, w.at(k)), w.at(k - 2))) return "N W_" + std::to_string(k) + " is not inside W_" + std::to_string(k - 2);
    int span = std::max(w.hi() - c, c - w.lo);
    Matrix nk = Matrix::identity(w.ambient);
    for (int k = 0; k <= span + 1; ++k) {
        if (k > 0) nk = nk * n;
        Subspace top = w.at(c + k), below = w.at(c + k - 1);
        Subspace bot = w.at(c - k), bot_below = w.at(c - k - 1);
        if (top.dim() - below.dim() != bot.dim() - bot_below.dim())
            return "dim Gr_" + std::to_string(c + k) + " != dim Gr_" + std::to_string(c - k);
        if (!is_subspace(intersect(kernel(nk), top), below))
            return "N^" + std::to_string(k) + " is not injective on Gr_" + std::to_string(c + k);
        if (sum(apply(nk, top), bot_below) != bot)
            return "N^" + std::to_string(k) + " does not surject onto Gr_" + std::to_string(c - k);
    }
    return {};
}

LmhsDatum make_lmhs(HodgeDatum hodge, Matrix n, std::optional<int> center) {
    LmhsDatum l;
    int c = center.value_or(hodge.weight);
    l.W = weight_filtration(n, c);
    l.hodge = std::move(hodge);
    l.N = std::move(n);
    return l;
}

LmhsDatum direct_sum(const LmhsDatum& a, const LmhsDatum& b) {
    if (a.hodge.weight != b.hodge.weight || a.center() != b.center())
        throw Error("ShapeMismatch", "direct sum needs equal weight and center");
    LmhsDatum out;
    out.hodge.dim = a.hodge.dim + b.hodge.dim;
    out.hodge.weight = a.hodge.weight;
    out.hodge.Q = direct_sum(a.hodge.Q, b.hodge.Q);
    out.hodge.F = direct_sum(a.hodge.F, b.hodge.F);
    out.N = direct_sum(a.N, b.N);
    out.W.ambient = out.hodge.dim;
    out.W.center = a.center();
    out.W.lo = std::min(a.W.lo, b.W.lo);
    int hi = std::max(a.W.hi(), b.W.hi());
    for (int k = out.W.lo; k <= hi; ++k)
        out.W.steps.push_back(sum(embed(a.W.at(k), out.W.ambient, 0), embed(b.W.at(k), out.W.ambient, a.hodge.dim)));
    return out;
}

std::string check_reconstruction(const LmhsDatum& l, const Bigrading& b) {
    const std::size_t d = l.hodge.dim;
    std::vector<Subspace> all;
    for (const auto& n : b.nodes) all.push_back(n.space);
    if (!is_direct_sum_decomposition(all, d)) return "the I^{p,q} do not decompose V";
    for (int k = l.W.lo - 1; k <= l.W.hi(); ++k) {
        std::vector<Subspace> parts;
        for (const auto& n : b.nodes)
            if (n.p + n.q <= k) parts.push_back(n.space);
        Subspace s = sum(parts, d);
        if (s != l.W.at(k)) return "W_" + std::to_string(k) + " != sum of I^{p,q} with p+q <= " + std::to_string(k);
    }
    for (int p = l.hodge.F.lo; p <= l.hodge.F.hi() + 1; ++p) {
        std::vector<Subspace> parts;
        for (const auto& n : b.nodes)
            if (n.p >= p) parts.push_back(n.space);
        if (sum(parts, d) != l.hodge.F.at(p)) return "F^" + std::to_string(p) + " != sum of I^{r,s} with r >= " + std::to_string(p);
    }
    return {};
}

Bigrading deligne_splitting_full(const LmhsDatum& l) {
    const std::size_t d = l.hodge.dim;
    const HodgeFiltration& f = l.hodge.F;
    const int lo = f.lo, hi = f.hi();
    std::map<int, Subspace> cf;
    auto conj_f = [&](int r) -> const Subspace& {
        auto it = cf.find(r);
        if (it == cf.end()) it = cf.emplace(r, conj(f.at(r))).first;
        return it->second;
    };
    Bigrading b;
    b.ambient = d;
    for (int p = lo; p <= hi; ++p)
        for (int q = lo; q <= hi; ++q) {
            int k = p + q;
            Subspace wk = l.W.at(k);
            if (wk.is_zero()) continue;
            Subspace a = intersect(f.at(p), wk);
            if (a.is_zero()) continue;
            Subspace inner = intersect(conj_f(q), wk);
            for (int j = 1; k - j - 1 >= l.W.lo; ++j) inner = sum(inner, intersect(conj_f(q - j), l.W.at(k - j - 1)));
            Subspace i = intersect(a, inner);
            if (!i.is_zero()) b.nodes.push_back({p, q, i});
        }
    std::string err = check_reconstruction(l, b);
    if (!err.empty()) throw Error("NotMhs", err);
    return b;
}

Bigrading deligne_splitting(const LmhsDatum& l) {
    const std::size_t d = l.hodge.dim;
    const HodgeFiltration& f = l.hodge.F;
    Bigrading b;
    b.ambient = d;
    std::size_t total = 0;
    for (int p = f.lo; p <= f.hi(); ++p)
        for (int q = f.lo; q <= f.hi(); ++q) {
            Subspace wk = l.W.at(p + q);
            if (wk.is_zero()) continue;
            Subspace j = intersect(intersect(f.at(p), conj(f.at(q))), wk);
            if (!j.is_zero()) {
                total += j.dim();
                b.nodes.push_back({p, q, j});
            }
        }
    if (total == d && is_r_split(b) && check_reconstruction(l, b).empty()) return b;
    return deligne_splitting_full(l);
}

bool is_r_split(const Bigrading& b) {
    for (const auto& n : b.nodes)
        if (conj(n.space) != b.at(n.q, n.p)) return false;
    return true;
}

bool is_hodge_tate(const Bigrading& b) {
    for (const auto& n : b.nodes)
        if (n.p != n.q && !n.space.is_zero()) return false;
    return true;
}

bool is_hodge_tate(const DimTable& t) {
    for (const auto& [k, v] : t)
        if (k.first != k.second && v != 0) return false;
    return true;
}

std::vector<std::pair<int, Subspace>> primitives(const LmhsDatum& l) {
    std::vector<std::pair<int, Subspace>> out;
    const int c = l.center();
    Matrix nk = l.N;
    for (int k = 0; c + k <= l.W.hi(); ++k) {
        if (k > 0) nk = nk * l.N;
        Subspace pre = intersect(preimage(nk, l.W.at(c - k - 3)), l.W.at(c + k));
        out.emplace_back(k, complement_in(l.W.at(c + k - 1), pre));
    }
    return out;
}

std::vector<Piece> primitive_pieces(const LmhsDatum& l, const Bigrading& b) {
    std::vector<Piece> out;
    const int c = l.center();
    for (const auto& n : b.nodes) {
        int k = n.p + n.q - c;
        if (k < 0) continue;
        Subspace p = intersect(n.space, kernel(power(l.N, static_cast<unsigned>(k + 1))));
        if (!p.is_zero()) out.push_back({n.p, n.q, p});
    }
    return out;
}

Matrix qk_form(const LmhsDatum& l, int k, PolarizationSign sign) {
    const int c = l.center();
    Matrix basis = complement_in(l.W.at(c + k - 1), l.W.at(c + k)).basis();
    Matrix qn = l.hodge.Q * power(l.N, static_cast<unsigned>(k));
    return Gq(epsilon(k, sign)) * gram(basis, qn, basis);
}

namespace {

std::string check_infinitesimal(const LmhsDatum& l) {
    const std::size_t d = l.hodge.dim;
    const Matrix& n = l.N;
    if (n.rows() != d || n.cols() != d) return "N must be dim x dim";
    if (!n.is_real()) return "N must be real";
    if (!is_nilpotent(n)) return "N is not nilpotent";
    if (!(transpose(n) * l.hodge.Q + l.hodge.Q * n).is_zero()) return "N is not in End(V,Q)";
    for (int p = l.hodge.F.lo; p <= l.hodge.F.hi() + 1; ++p)
        if (!is_subspace(apply(n, l.hodge.F.at(p)), l.hodge.F.at(p - 1)))
            return "N F^" + std::to_string(p) + " is not inside F^" + std::to_string(p - 1);
    return {};
}

std::string check_graded_hodge(const LmhsDatum& l) {
    const HodgeFiltration& f = l.hodge.F;
    for (int k = l.W.lo; k <= l.W.hi(); ++k) {
        Subspace wk = l.W.at(k), wk1 = l.W.at(k - 1);
        if (wk.dim() == wk1.dim()) continue;
        for (int p = f.lo; p <= f.hi() + 1; ++p) {
            Subspace a = sum(intersect(f.at(p), wk), wk1);
            Subspace b = sum(intersect(conj(f.at(k - p + 1)), wk), wk1);
            if (sum(a, b) != wk || intersect(a, b) != wk1)
                return "F does not induce a Hodge structure of weight " + std::to_string(k) + " on Gr_" + std::to_string(k);
        }
    }
    return {};
}

std::string check_polarization(const LmhsDatum& l, const Bigrading& b, PolarizationSign sign) {
    const int c = l.center();
    auto pieces = primitive_pieces(l, b);
    auto lifted = primitives(l);
    for (const auto& [k, lift] : lifted) {
        std::size_t total = 0;
        for (const auto& pc : pieces)
            if (pc.p + pc.q == c + k) total += pc.space.dim();
        if (total != lift.dim()) return "primitive pieces at level " + std::to_string(c + k) + " do not match Gr_prim";
    }
    for (const auto& a : pieces) {
        int k = a.p + a.q - c;
        Matrix qn = Gq(epsilon(k, sign)) * (l.hodge.Q * power(l.N, static_cast<unsigned>(k)));
        for (const auto& bb : pieces) {
            if (bb.p + bb.q != c + k || a.p + bb.p <= c + k) continue;
            if (!gram(a.space.basis(), qn, bb.space.basis()).is_zero())
                return "Q_" + std::to_string(k) + " does not vanish on P" + pq(a.p, a.q) + " x P" + pq(bb.p, bb.q);
        }
        Matrix h = Gq::i_pow(a.p - a.q) * gram(a.space.basis(), qn, conj(a.space.basis()));
        bool pd = false;
        try {
            pd = hermitian_pd(h);
        } catch (const Error&) {
            return "Q_" + std::to_string(k) + " form on P" + pq(a.p, a.q) + " is not Hermitian";
        }
        if (!pd) return "i^{p-q} Q_" + std::to_string(k) + "(v, conj v) is not positive on P" + pq(a.p, a.q);
    }
    return {};
}

}  // namespace

Report validate_lmhs(const LmhsDatum& l, const ValidateOptions& opts) {
    Report r = check_structure(l.hodge);
    auto skip_rest = [&r](const char* why) {
        for (const char* name : {"infinitesimal", "weight_filtration", "graded_hodge", "n_type", "polarization"})
            r.add(name, false, why);
        return r;
    };
    if (!r.ok()) return skip_rest("skipped: structure invalid");
    std::string err = check_infinitesimal(l);
    r.add("infinitesimal", err.empty(), err);
    if (!err.empty()) {
        for (const char* name : {"weight_filtration", "graded_hodge", "n_type", "polarization"})
            r.add(name, false, "skipped: N invalid");
        return r;
    }
    WeightFiltration computed = weight_filtration(l.N, l.center());
    err = (computed == l.W) ? check_weight_properties(l.N, l.W) : "W differs from the weight filtration of N";
    r.add("weight_filtration", err.empty(), err);
    err = check_graded_hodge(l);
    r.add("graded_hodge", err.empty(), err);
    Bigrading b;
    try {
        b = deligne_splitting(l);
    } catch (const Error& e) {
        r.add("n_type", false, std::string("no Deligne splitting: ") + e.what());
        r.add("polarization", false, "skipped: no Deligne splitting");
        return r;
    }
    err.clear();
    for (const auto& n : b.nodes)
        if (!is_subspace(apply(l.N, n.space), b.at(n.p - 1, n.q - 1))) {
            err = "N I" + pq(n.p, n.q) + " is not inside I" + pq(n.p - 1, n.q - 1);
            break;
        }
    r.add("n_type", err.empty(), err);
    err = check_polarization(l, b, opts.sign);
    r.add("polarization", err.empty(), err);
    return r;
}

Report disc_sample(const LmhsDatum& l, const std::vector<mpq_class>& ys) {
    Report r;
    for (const auto& y : ys) {
        HodgeDatum d = l.hodge;
        d.F = transform(nilpotent_exp(l.N, Gq(0, y)), l.hodge.F);
        Report v = validate_phs(d);
        r.add("y=" + y.get_str(), v.ok(), v.ok() ? "" : "fails " + v.first_failure());
    }
    return r;
}

Matrix AdjointLmhs::element(const Vec& coords) const {
    std::size_t d = frame.rows();
    Matrix m(d, d);
    for (std::size_t k = 0; k < g_basis.size(); ++k)
        if (!coords[k].is_zero()) m = m + coords[k] * g_basis[k];
    return m;
}

Vec AdjointLmhs::coords_of(const Matrix& x) const {
    Matrix fi = inverse(frame);
    return framed_coords.coords(flatten(fi * x * frame));
}

std::vector<Matrix> endomorphism_algebra(const Matrix& q) {
    const std::size_t d = q.rows();
    Matrix m(d * d, d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            std::size_t row = a * d + b;
            for (std::size_t c = 0; c < d; ++c) {
                if (!q(c, b).is_zero()) m(row, c * d + a) += q(c, b);
                if (!q(a, c).is_zero()) m(row, c * d + b) += q(a, c);
            }
        }
    Subspace k = kernel(m);
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < k.dim(); ++i) out.push_back(unflatten(k.vector(i), d));
    return out;
}

AdjointLmhs adjoint_lmhs(const LmhsDatum& l, const std::vector<Matrix>& g_basis) {
    Bigrading b = deligne_splitting(l);
    if (!is_r_split(b)) throw Error("NonRSplit", "adjoint induction requires an R-split LMHS");
    const std::size_t d = l.hodge.dim;
    AdjointLmhs a;
    a.g_basis = g_basis.empty() ? endomorphism_algebra(l.hodge.Q) : g_basis;
    for (const auto& x : a.g_basis)
        if (!(transpose(x) * l.hodge.Q + l.hodge.Q * x).is_zero())
            throw Error("NotInEndVQ", "supplied basis element does not preserve Q");
    const std::size_t m = a.g_basis.size();

    a.frame = Matrix(d, d);
    std::size_t col = 0;
    for (const auto& n : b.nodes)
        for (std::size_t i = 0; i < n.space.dim(); ++i) {
            for (std::size_t r = 0; r < d; ++r) a.frame(r, col) = n.space.basis()(i, r);
            a.labels.emplace_back(n.p, n.q);
            ++col;
        }
    Matrix fi = inverse(a.frame);
    Matrix flat(m, d * d);
    for (std::size_t k = 0; k < m; ++k) {
        a.framed_basis.push_back(fi * a.g_basis[k] * a.frame);
        Vec v = flatten(a.framed_basis.back());
        for (std::size_t j = 0; j < d * d; ++j) flat(k, j) = v[j];
    }
    a.framed_coords = Coordinates(flat);

    // Project each framed basis element onto its bidegree components.
    std::map<std::pair<int, int>, std::vector<Vec>> comps;
    for (std::size_t k = 0; k < m; ++k) {
        std::map<std::pair<int, int>, Vec> parts;
        const Matrix& x = a.framed_basis[k];
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                if (x(i, j).is_zero()) continue;
                std::pair<int, int> deg{a.labels[i].first - a.labels[j].first, a.labels[i].second - a.labels[j].second};
                auto& v = parts[deg];
                if (v.empty()) v.assign(d * d, Gq());
                v[i * d + j] = x(i, j);
            }
        for (auto& [deg, v] : parts) {
            Vec c;
            if (!a.framed_coords.solve(v, c))
                throw Error("NotGraded", "g is not compatible with the Deligne splitting at bidegree " + pq(deg.first, deg.second));
            comps[deg].push_back(std::move(c));
        }
    }
    a.I_g.ambient = m;
    std::size_t total = 0;
    for (auto& [deg, vs] : comps) {
        Subspace s = Subspace::span(vs, m);
        total += s.dim();
        a.I_g.nodes.push_back({deg.first, deg.second, s});
    }
    if (total != m) throw Error("NotGraded", "bidegree components of g are not independent");

    int pmin = 0, pmax = 0, wmin = 0, wmax = 0;
    for (const auto& n : a.I_g.nodes) {
        pmin = std::min(pmin, n.p);
        pmax = std::max(pmax, n.p);
        wmin = std::min(wmin, n.p + n.q);
        wmax = std::max(wmax, n.p + n.q);
    }
    a.F_g.ambient = m;
    a.F_g.lo = pmin;
    for (int p = pmin; p <= pmax; ++p) {
        std::vector<Subspace> parts;
        for (const auto& n : a.I_g.nodes)
            if (n.p >= p) parts.push_back(n.space);
        a.F_g.steps.push_back(sum(parts, m));
    }
    a.W_g.ambient = m;
    a.W_g.center = 0;
    a.W_g.lo = wmin;
    for (int k = wmin; k <= wmax; ++k) {
        std::vector<Subspace> parts;
        for (const auto& n : a.I_g.nodes)
            if (n.p + n.q <= k) parts.push_back(n.space);
        a.W_g.steps.push_back(sum(parts, m));
    }
    a.killing_proxy = Matrix(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            Gq t = trace(a.g_basis[i] * a.g_basis[j]);
            a.killing_proxy(i, j) = t;
            a.killing_proxy(j, i) = t;
        }
    a.n_coords = a.coords_of(l.N);
    if (!a.I_g.at(-1, -1).contains(a.n_coords) && !is_zero(a.n_coords))
        throw Error("NotGraded", "N does not lie in I^{-1,-1}_g");
    return a;
}

HodgeFiltration reduced_limit(const Bigrading& b, int n) {
    if (!is_r_split(b)) throw Error("NonRSplit", "reduced limit requires an R-split splitting");
    HodgeFiltration f;
    f.ambient = b.ambient;
    f.lo = 0;
    for (int p = 0; p <= n; ++p) {
        std::vector<Subspace> parts;
        for (const auto& node : b.nodes)
            if (node.q <= n - p) parts.push_back(node.space);
        f.steps.push_back(sum(parts, b.ambient));
    }
    return f;
}

Report check_reduced_limit(const LmhsDatum& l, const HodgeFiltration& finf) {
    Report r;
    const int n = l.hodge.weight;
    std::string err;
    for (int p = 0; p <= n + 1 && err.empty(); ++p)
        if (!gram(finf.at(p).basis(), l.hodge.Q, finf.at(n - p + 1).basis()).is_zero())
            err = "Q(F^" + std::to_string(p) + "_inf, F^" + std::to_string(n - p + 1) + "_inf) != 0";
    r.add("hr1_isotropy", err.empty(), err);
    err.clear();
    Matrix t = nilpotent_exp(l.N, Gq(1));
    for (int p = 0; p <= n && err.empty(); ++p)
        if (apply(t, finf.at(p)) != finf.at(p)) err = "exp(N) moves F^" + std::to_string(p) + "_inf";
    r.add("monodromy_fixed", err.empty(), err);
    return r;
}

DiagonalLevi diagonal_levi(const AdjointLmhs& a) {
    const std::size_t m = a.g_basis.size();
    const std::size_t d = a.frame.rows();
    DiagonalLevi out;
    std::vector<Subspace> diag;
    std::vector<std::pair<int, Vec>> gens;  // (p, coordinates) for each I^{p,p} basis vector
    for (const auto& n : a.I_g.nodes) {
        if (n.p != n.q) continue;
        diag.push_back(n.space);
        out.I_s.nodes.push_back(n);
        for (std::size_t i = 0; i < n.space.dim(); ++i) gens.emplace_back(n.p, n.space.vector(i));
    }
    out.I_s.ambient = m;
    out.s = sum(diag, m);
    if (conj(out.s) != out.s) throw Error("NotConjStable", "diagonal subalgebra is not conjugation stable");

    std::vector<Matrix> framed;
    for (const auto& [p, c] : gens) {
        Matrix x(d, d);
        for (std::size_t k = 0; k < m; ++k)
            if (!c[k].is_zero()) x = x + c[k] * a.framed_basis[k];
        framed.push_back(std::move(x));
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            Matrix br = bracket(framed[i], framed[j]);
            if (br.is_zero()) continue;
            Vec c;
            int t = gens[i].first + gens[j].first;
            if (!a.framed_coords.solve(flatten(br), c) || !a.I_g.at(t, t).contains(c))
                throw Error("BracketEscape", "[s, s] is not contained in s");
        }
    for (std::size_t i = 0; i < out.s.dim(); ++i) out.basis.push_back(a.element(out.s.vector(i)));
    out.F_s.ambient = m;
    out.F_s.lo = a.F_g.lo;
    for (const auto& step : a.F_g.steps) out.F_s.steps.push_back(intersect(step, out.s));
    out.W_s.ambient = m;
    out.W_s.center = 0;
    out.W_s.lo = a.W_g.lo;
    for (const auto& step : a.W_g.steps) out.W_s.steps.push_back(intersect(step, out.s));
    out.contains_n = out.s.contains(a.n_coords);
    bool ht = true;
    for (int k = out.W_s.lo; k <= out.W_s.hi(); ++k) {
        std::vector<Subspace> parts;
        for (const auto& n : out.I_s.nodes)
            if (2 * n.p <= k) parts.push_back(n.space);
        if (sum(parts, m) != out.W_s.at(k)) ht = false;
    }
    for (int p = out.F_s.lo; p <= out.F_s.hi(); ++p) {
        std::vector<Subspace> parts;
        for (const auto& n : out.I_s.nodes)
            if (n.p >= p) parts.push_back(n.space);
        if (sum(parts, m) != out.F_s.at(p)) ht = false;
    }
    out.hodge_tate = ht && is_hodge_tate(out.I_s);
    return out;
}

DimTable primitive_dims(const DimTable& t, int center) {
    DimTable out;
    for (const auto& [k, v] : t) {
        if (k.first + k.second < center) continue;
        auto it = t.find({k.first + 1, k.second + 1});
        int above = it == t.end() ? 0 : it->second;
        if (v - above != 0) out[k] = v - above;
    }
    return out;
}

DimTable nonzero(const DimTable& t) {
    DimTable out;
    for (const auto& [k, v] : t)
        if (v != 0) out[k] = v;
    return out;
}

}  // namespace hodge
