#include "hodge/roots.hpp"

#include <algorithm>

#include "hodge/errors.hpp"

namespace hodge {

QVec to_q(const IVec& v) { return QVec(v.begin(), v.end()); }

mpq_class RootSystem::inner(const QVec& a, const QVec& b) const {
    mpq_class s = 0;
    for (int i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank; ++j) {
            if (b[j] == 0) continue;
            // (α_i, α_j) = <α_i, α_j^∨> (α_j, α_j) / 2
            s += a[i] * b[j] * mpq_class(cartan[i][j] * len2[j]) / 2;
        }
    }
    return s;
}

mpq_class RootSystem::pair(const QVec& a, const QVec& b) const { return 2 * inner(a, b) / inner(b, b); }

bool RootSystem::is_long(const IVec& root) const {
    mpq_class l = inner(to_q(root), to_q(root));
    mpq_class mx = *std::max_element(len2.begin(), len2.end());
    return l == mx;
}

IVec RootSystem::highest_root() const { return positive.back(); }

bool RootSystem::is_root(const IVec& v) const { return std::binary_search(roots.begin(), roots.end(), v); }

static IMatrix cartan_for(char type, int r) {
    IMatrix a(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i) a[i][i] = 2;
    auto link = [&a](int i, int j) { a[i][j] = a[j][i] = -1; };
    switch (type) {
        case 'A':
            for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
            break;
        case 'B':
            for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
            if (r >= 2) a[r - 2][r - 1] = -2;  // α_r short
            break;
        case 'C':
            for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
            if (r >= 2) a[r - 1][r - 2] = -2;  // α_r long
            break;
        case 'D':
            for (int i = 0; i + 2 < r - 1; ++i) link(i, i + 1);
            if (r >= 3) {
                link(r - 3, r - 2);
                link(r - 3, r - 1);
            }
            break;
        case 'G':
            a = {{2, -1}, {-3, 2}};
            break;
        case 'F':
            a = {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
            break;
        default:
            break;
    }
    return a;
}

static std::vector<int> lengths_for(char type, int r) {
    std::vector<int> l(r, 2);
    if (type == 'B' && r >= 2)
        for (int i = 0; i + 1 < r; ++i) l[i] = 4;
    if (type == 'C') l[r - 1] = 4;
    if (type == 'G') l = {2, 6};
    if (type == 'F') l = {4, 4, 2, 2};
    return l;
}

RootSystem build_root_system(char type, int rank) {
    bool ok = (type == 'A' && rank >= 1) || (type == 'B' && rank >= 1) || (type == 'C' && rank >= 1) ||
              (type == 'D' && rank >= 2) || (type == 'G' && rank == 2) || (type == 'F' && rank == 4);
    if (!ok) throw Error("UnsupportedType", std::string(1, type) + std::to_string(rank) + " is not supported");
    RootSystem rs;
    rs.type = type;
    rs.rank = rank;
    rs.cartan = cartan_for(type, rank);
    rs.len2 = lengths_for(type, rank);
    // Grow positive roots height by height using α_i-strings: if β - pα_i is the
    // bottom of the string then β + α_i is a root iff p - <β, α_i^∨> > 0.
    std::set<IVec> pos;
    std::vector<IVec> level;
    for (int i = 0; i < rank; ++i) {
        IVec e(rank, 0);
        e[i] = 1;
        level.push_back(e);
        pos.insert(e);
    }
    while (!level.empty()) {
        std::set<IVec> next;
        for (const auto& b : level)
            for (int i = 0; i < rank; ++i) {
                int p = 0;
                IVec down = b;
                while (true) {
                    down[i] -= 1;
                    if (!pos.count(down)) break;
                    ++p;
                }
                int pairing = 0;
                for (int k = 0; k < rank; ++k) pairing += b[k] * rs.cartan[k][i];
                if (p - pairing > 0) {
                    IVec up = b;
                    up[i] += 1;
                    if (!pos.count(up)) next.insert(up);
                }
            }
        level.assign(next.begin(), next.end());
        for (const auto& b : level) pos.insert(b);
    }
    rs.positive.assign(pos.begin(), pos.end());
    auto height = [](const IVec& v) {
        int h = 0;
        for (int x : v) h += x;
        return h;
    };
    std::stable_sort(rs.positive.begin(), rs.positive.end(),
                     [&](const IVec& a, const IVec& b) { return height(a) < height(b); });
    for (const auto& b : rs.positive) {
        rs.roots.push_back(b);
        IVec n = b;
        for (auto& x : n) x = -x;
        rs.roots.push_back(n);
    }
    std::sort(rs.roots.begin(), rs.roots.end());
    // ω_i = Σ_k (A^{-1})_{ik} α_k
    Matrix a(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) a(i, j) = rs.cartan[i][j];
    Matrix ainv = inverse(a);
    for (int i = 0; i < rank; ++i) {
        QVec w(rank);
        for (int k = 0; k < rank; ++k) w[k] = ainv(i, k).re();
        rs.fundamental_weights.push_back(w);
    }
    return rs;
}

mpq_class GradingElement::eval(const IVec& root) const {
    mpq_class s = 0;
    for (std::size_t i = 0; i < root.size(); ++i) s += root[i] * values[i];
    return s;
}

mpq_class GradingElement::eval(const QVec& weight) const {
    mpq_class s = 0;
    for (std::size_t i = 0; i < weight.size(); ++i) s += weight[i] * values[i];
    return s;
}

GradingElement GradingElement::scaled(const mpq_class& s) const {
    GradingElement g = *this;
    for (auto& v : g.values) v *= s;
    return g;
}

GradingElement grading_from_sigma(const RootSystem& rs, const std::set<int>& sigma) {
    GradingElement g;
    for (int i = 0; i < rs.rank; ++i) g.values.push_back(sigma.count(i) ? 0 : 1);
    return g;
}

std::set<int> sigma_from_grading(const RootSystem& rs, const GradingElement& l) {
    std::set<int> s;
    for (int i = 0; i < rs.rank; ++i) {
        if (l.values[i] < 0) throw Error("NegativeGrading", "grading element is negative on a simple root");
        if (l.values[i] == 0) s.insert(i);
    }
    return s;
}

GradingElement coroot_grading(const RootSystem& rs, const IVec& root) {
    GradingElement g;
    QVec a = to_q(root);
    for (int i = 0; i < rs.rank; ++i) {
        QVec e(rs.rank, 0);
        e[i] = 1;
        g.values.push_back(rs.pair(e, a));
    }
    return g;
}

static int integral(mpq_class v, const char* code) {
    v.canonicalize();
    if (v.get_den() != 1) throw Error(code, "value " + v.get_str() + " is not an integer");
    return static_cast<int>(v.get_num().get_si());
}

std::map<int, int> l_decomposition(const RootSystem& rs, const GradingElement& l) {
    std::map<int, int> out;
    out[0] += rs.rank;
    for (const auto& b : rs.roots) out[integral(l.eval(b), "NonIntegralGrading")] += 1;
    return out;
}

Compactness compactness(const RootSystem& rs, const GradingElement& l) {
    Compactness c;
    for (const auto& b : rs.roots) {
        int v = integral(l.eval(b), "NonIntegralGrading");
        (v % 2 == 0 ? c.compact : c.noncompact).push_back(b);
    }
    return c;
}

DimTable adjoint_bigrading(const RootSystem& rs, const GradingElement& l, const GradingElement& y) {
    DimTable t;
    t[{0, 0}] += rs.rank;
    for (const auto& b : rs.roots) {
        int lv = integral(l.eval(b), "NonIntegralGrading");
        int yv = integral(y.eval(b), "NonIntegralGrading");
        t[{yv - lv, lv}] += 1;
    }
    return t;
}

DimTable rep_bigrading(const WeightMultiset& w, const GradingElement& l, const GradingElement& y, int n) {
    DimTable t;
    mpq_class shift(n, 2);
    shift.canonicalize();
    for (const auto& [lam, mult] : w) {
        int p = integral(y.eval(lam) - l.eval(lam) + shift, "HalfIntegralityViolation");
        int q = integral(l.eval(lam) + shift, "HalfIntegralityViolation");
        t[{p, q}] += mult;
    }
    return nonzero(t);
}

WeightMultiset standard_weights(const RootSystem& rs) {
    const int r = rs.rank;
    std::vector<QVec> eps(r, QVec(r, 0));
    switch (rs.type) {
        case 'A': {
            std::vector<QVec> e(r + 1, QVec(r, 0));
            for (int j = 0; j < r; ++j) e[0][j] = mpq_class(r - j) / (r + 1);
            for (int i = 0; i < r; ++i) {
                e[i + 1] = e[i];
                e[i + 1][i] -= 1;
            }
            WeightMultiset w;
            for (auto& v : e) w.emplace_back(v, 1);
            return w;
        }
        case 'B':
            for (int i = 0; i < r; ++i)
                for (int j = i; j < r; ++j) eps[i][j] = 1;
            break;
        case 'C':
            for (int i = 0; i < r; ++i) {
                for (int j = i; j < r - 1; ++j) eps[i][j] = 1;
                eps[i][r - 1] = mpq_class(1, 2);
            }
            break;
        case 'D':
            for (int i = 0; i < r; ++i) {
                if (i <= r - 2) {
                    for (int j = i; j < r - 2; ++j) eps[i][j] = 1;
                    eps[i][r - 2] = mpq_class(1, 2);
                    eps[i][r - 1] = mpq_class(1, 2);
                }
            }
            eps[r - 1][r - 2] = mpq_class(-1, 2);
            eps[r - 1][r - 1] = mpq_class(1, 2);
            break;
        default:
            throw Error("UnsupportedType", "standard representation only for classical types");
    }
    WeightMultiset w;
    for (const auto& e : eps) {
        w.emplace_back(e, 1);
        QVec n = e;
        for (auto& x : n) x = -x;
        w.emplace_back(n, 1);
    }
    if (rs.type == 'B') w.emplace_back(QVec(r, 0), 1);
    return w;
}

WeightMultiset short_root_weights(const RootSystem& rs, int zeros) {
    WeightMultiset w;
    mpq_class mn = *std::min_element(rs.len2.begin(), rs.len2.end());
    for (const auto& b : rs.roots)
        if (rs.inner(to_q(b), to_q(b)) == mn) w.emplace_back(to_q(b), 1);
    if (zeros > 0) w.emplace_back(QVec(rs.rank, 0), zeros);
    return w;
}

IVec characteristic_vector(const RootSystem& rs, const GradingElement& y) {
    IVec c;
    for (const auto& v : y.values) c.push_back(integral(v, "NotNormalizable"));
    for (int guard = 0;; ++guard) {
        if (guard > 100000) throw Error("NotNormalizable", "descent did not terminate");
        int j = -1;
        for (int i = 0; i < rs.rank; ++i)
            if (c[i] < 0) {
                j = i;
                break;
            }
        if (j < 0) break;
        // α_i(s_j Y) = α_i(Y) - <α_i, α_j^∨> α_j(Y)
        int cj = c[j];
        for (int i = 0; i < rs.rank; ++i) c[i] -= rs.cartan[i][j] * cj;
    }
    for (int x : c)
        if (x > 2) throw Error("EntryOutOfRange", "characteristic vector entry " + std::to_string(x) + " exceeds 2");
    return c;
}

std::pair<std::set<int>, bool> jm_parabolic(const RootSystem& rs, const GradingElement& y) {
    IVec c = characteristic_vector(rs, y);
    std::set<int> sigma;
    bool even = true;
    for (int i = 0; i < rs.rank; ++i) {
        if (c[i] == 0) sigma.insert(i);
        if (c[i] % 2 != 0) even = false;
    }
    return {sigma, even};
}

IVec characteristic_vector_from_eigenvalues(const RootSystem& rs, const WeightMultiset& w,
                                            std::vector<int> eigenvalues) {
    std::sort(eigenvalues.begin(), eigenvalues.end());
    const int r = rs.rank;
    std::vector<IVec> found;
    IVec c(r, 0);
    while (true) {
        std::vector<int> vals;
        bool integral_ok = true;
        for (const auto& [lam, mult] : w) {
            mpq_class v = 0;
            for (int i = 0; i < r; ++i) v += lam[i] * c[i];
            if (v.get_den() != 1) {
                integral_ok = false;
                break;
            }
            for (int m = 0; m < mult; ++m) vals.push_back(static_cast<int>(v.get_num().get_si()));
        }
        if (integral_ok) {
            std::sort(vals.begin(), vals.end());
            if (vals == eigenvalues) found.push_back(c);
        }
        int i = 0;
        while (i < r && c[i] == 2) c[i++] = 0;
        if (i == r) break;
        ++c[i];
    }
    if (found.size() != 1)
        throw Error("NoCharacteristicVector", std::to_string(found.size()) + " characteristic vectors match the eigenvalues");
    return found[0];
}

std::vector<int> neutral_eigenvalues(const Matrix& n) {
    const std::size_t d = n.rows();
    std::vector<std::size_t> rk{d};
    Matrix p = Matrix::identity(d);
    for (std::size_t k = 1; k <= d + 1; ++k) {
        p = p * n;
        rk.push_back(rank(p));
    }
    std::vector<int> out;
    for (std::size_t len = 1; len <= d; ++len) {
        long at_least = static_cast<long>(rk[len - 1]) - static_cast<long>(rk[len]);
        long more = static_cast<long>(rk[len]) - static_cast<long>(rk[len + 1]);
        for (long b = 0; b < at_least - more; ++b)
            for (std::size_t s = 0; s < len; ++s) out.push_back(static_cast<int>(len - 1) - 2 * static_cast<int>(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

IVec act(const IMatrix& m, const IVec& v) {
    IVec out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

IMatrix identity_imatrix(int r) {
    IMatrix m(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i) m[i][i] = 1;
    return m;
}

IMatrix negate(const IMatrix& m) {
    IMatrix out = m;
    for (auto& row : out)
        for (auto& x : row) x = -x;
    return out;
}

IMatrix reflection_matrix(const RootSystem& rs, const IVec& alpha) {
    const int r = rs.rank;
    IMatrix m(r, std::vector<int>(r, 0));
    QVec a = to_q(alpha);
    for (int j = 0; j < r; ++j) {
        QVec e(r, 0);
        e[j] = 1;
        mpq_class pr = rs.pair(e, a);
        if (pr.get_den() != 1) throw Error("NonIntegralGrading", "non-integral pairing");
        int p = static_cast<int>(pr.get_num().get_si());
        for (int i = 0; i < r; ++i) m[i][j] = (i == j ? 1 : 0) - p * alpha[i];
    }
    return m;
}

void check_involutions(const RootSystem& rs, const InvolutionDatum& inv) {
    const int r = rs.rank;
    auto fail = [](const std::string& why) { throw Error("InconsistentInvolutions", why); };
    if (static_cast<int>(inv.sigma.size()) != r || static_cast<int>(inv.theta.size()) != r) fail("wrong matrix size");
    for (const auto& b : rs.roots) {
        IVec s = act(inv.sigma, b), t = act(inv.theta, b);
        if (act(inv.sigma, s) != b) fail("sigma is not an involution");
        if (act(inv.theta, t) != b) fail("theta is not an involution");
        if (act(inv.sigma, t) != act(inv.theta, s)) fail("sigma and theta do not commute");
        if (!rs.is_root(s) || !rs.is_root(t)) fail("sigma or theta does not permute the roots");
        IVec ts = act(inv.theta, s);
        for (int i = 0; i < r; ++i)
            if (ts[i] != -b[i]) fail("theta(conj(alpha)) != -alpha");
    }
}

namespace {

bool is_compact_imaginary(const IVec& b, const GradingElement& l, const InvolutionDatum& inv) {
    if (inv.noncompact_imaginary) return !inv.noncompact_imaginary->count(b);
    mpq_class v = l.eval(b);
    return v.get_den() == 1 && mpz_class(v.get_num() % 2) == 0;
}

int theta_fixed_rank(const IMatrix& theta) {
    const int r = static_cast<int>(theta.size());
    Matrix m(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m(i, j) = theta[i][j] - (i == j ? 1 : 0);
    return r - static_cast<int>(rank(m));
}

}  // namespace

OrbitDims orbit_dims(const RootSystem& rs, const GradingElement& l, const InvolutionDatum& inv) {
    check_involutions(rs, inv);
    OrbitDims o;
    std::set<IVec> pp;
    for (const auto& b : rs.roots) {
        mpq_class a = l.eval(b), s = l.eval(act(inv.sigma, b));
        if (a >= 0 && s >= 0) pp.insert(b);
        if (a > 0 && s < 0) ++o.count_pm;
        if (a < 0 && s > 0) ++o.count_mp;
        if (a > 0) ++o.dim_C_dual;
    }
    o.count_pp = static_cast<int>(pp.size());
    o.count_orbit = static_cast<int>(rs.roots.size()) - o.count_pp;
    o.dim_R_orbit = o.count_orbit;

    int h_theta = theta_fixed_rank(inv.theta);
    int k_dim = h_theta, k_stab = h_theta;
    std::set<IVec> seen;
    for (const auto& b : rs.roots) {
        IVec t = act(inv.theta, b);
        if (t == b) {
            if (is_compact_imaginary(b, l, inv)) {
                ++k_dim;
                if (pp.count(b)) ++k_stab;
            }
        } else if (!seen.count(b)) {
            seen.insert(b);
            seen.insert(t);
            ++k_dim;
            if (pp.count(b) && pp.count(t)) ++k_stab;
        }
    }
    o.dim_KR_orbit = k_dim - k_stab;
    return o;
}

bool closed_orbit_criterion(const RootSystem& rs, const GradingElement& l, const InvolutionDatum& inv) {
    check_involutions(rs, inv);
    for (const auto& b : rs.roots) {
        if (l.eval(b) < 0 && l.eval(act(inv.sigma, b)) > 0) {
            if (act(inv.theta, b) != b || !is_compact_imaginary(b, l, inv)) return false;
        }
    }
    return true;
}

}  // namespace hodge
