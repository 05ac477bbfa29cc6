#include "hodge/classifier.hpp"

#include <algorithm>

#include "hodge/errors.hpp"

namespace hodge {

namespace {

LmhsDatum pure_lmhs(const HodgeDatum& d) { return make_lmhs(d, Matrix(d.dim, d.dim)); }

void bump(DimTable& t, int p, int q, int v) { t[{p, q}] += v; }

}  // namespace

std::string MinimalType::label() const {
    if (kind == Kind::II) return "II";
    return "I(" + std::to_string(p_o) + "," + std::to_string(q_o) + ")";
}

DimTable minimal_i_table(const HodgeNumbers& h, MinimalType::Kind kind, int p_o) {
    const int n = h.n;
    DimTable t;
    for (int p = 0; p <= n; ++p) bump(t, p, n - p, h.at(p));
    if (kind == MinimalType::Kind::I) {
        const int q_o = n - p_o;
        bump(t, p_o + 1, q_o, 1);
        bump(t, p_o, q_o - 1, 1);
        bump(t, p_o, q_o, -1);
        bump(t, p_o + 1, q_o - 1, -1);
        if (q_o - p_o >= 2) {
            bump(t, q_o, p_o + 1, 1);
            bump(t, q_o - 1, p_o, 1);
            bump(t, q_o, p_o, -1);
            bump(t, q_o - 1, p_o + 1, -1);
        }
    } else {
        const int m = n / 2;
        bump(t, m + 1, m + 1, 1);
        bump(t, m - 1, m - 1, 1);
        bump(t, m - 1, m + 1, -1);
        bump(t, m + 1, m - 1, -1);
    }
    return t;
}

std::vector<MinimalType> minimal_types(const HodgeNumbers& h) {
    if (!h.symmetric()) throw Error("InadmissibleHodgeNumbers", "Hodge numbers must be symmetric and non-negative");
    std::vector<MinimalType> out;
    const int n = h.n;
    for (int p_o = 0; 2 * p_o < n; ++p_o) {
        const int q_o = n - p_o;
        if (h.at(p_o) < 1 || h.at(p_o + 1) < 1) continue;
        DimTable t = minimal_i_table(h, MinimalType::Kind::I, p_o);
        bool nonneg = std::all_of(t.begin(), t.end(), [](const auto& kv) { return kv.second >= 0; });
        if (!nonneg) continue;
        MinimalType mt;
        mt.kind = MinimalType::Kind::I;
        mt.p_o = p_o;
        mt.q_o = q_o;
        mt.i_table = nonzero(t);
        out.push_back(mt);
    }
    if (n % 2 == 0 && n >= 2) {
        const int m = n / 2;
        if (h.at(m) % 2 == 1 && h.at(m - 1) >= 1) {
            MinimalType mt;
            mt.kind = MinimalType::Kind::II;
            mt.p_o = m - 1;
            mt.q_o = m + 1;
            mt.i_table = nonzero(minimal_i_table(h, MinimalType::Kind::II));
            out.push_back(mt);
        }
    }
    return out;
}

LmhsDatum string_block(const HodgeDatum& u, int length) {
    const std::size_t du = u.dim;
    const auto len = static_cast<std::size_t>(length);
    const std::size_t dim = du * len;
    HodgeDatum v;
    v.dim = dim;
    v.weight = u.weight + length - 1;
    v.Q = Matrix(dim, dim);
    for (std::size_t a = 0; a < len; ++a) {
        std::size_t b = len - 1 - a;
        long sign = (a % 2 == 0) ? 1 : -1;
        for (std::size_t x = 0; x < du; ++x)
            for (std::size_t y = 0; y < du; ++y)
                if (!u.Q(x, y).is_zero()) v.Q(a * du + x, b * du + y) = Gq(sign) * u.Q(x, y);
    }
    Matrix n(dim, dim);
    for (std::size_t j = 0; j + 1 < len; ++j)
        for (std::size_t x = 0; x < du; ++x) n((j + 1) * du + x, j * du + x) = 1;
    v.F.ambient = dim;
    v.F.lo = 0;
    for (int p = 0; p <= v.weight; ++p) {
        std::vector<Subspace> parts;
        for (std::size_t j = 0; j < len; ++j)
            parts.push_back(embed(u.F.at(p - length + 1 + static_cast<int>(j)), dim, j * du));
        v.F.steps.push_back(sum(parts, dim));
    }
    return make_lmhs(std::move(v), std::move(n));
}

LmhsDatum atomic_block(int n, int k, int d) {
    if (k < 0 || 2 * k > n || d < 1) throw Error("InvalidBlock", "atomic block needs 0 <= k <= n/2 and d >= 1");
    const int len = n - 2 * k + 1;
    const auto dim = static_cast<std::size_t>(len * d);
    auto idx = [&](int a, int s) { return static_cast<std::size_t>(a * len + (s - k)); };
    HodgeDatum v;
    v.dim = dim;
    v.weight = n;
    v.Q = Matrix(dim, dim);
    Matrix nm(dim, dim);
    for (int a = 0; a < d; ++a)
        for (int s = k; s <= n - k; ++s) {
            v.Q(idx(a, s), idx(a, n - s)) = ((n - k - s) % 2 == 0) ? 1 : -1;
            if (s > k) nm(idx(a, s - 1), idx(a, s)) = 1;
        }
    v.F.ambient = dim;
    v.F.lo = 0;
    for (int p = 0; p <= n; ++p) {
        std::vector<Vec> rows;
        for (int a = 0; a < d; ++a)
            for (int s = std::max(p, k); s <= n - k; ++s) {
                Vec e(dim);
                e[idx(a, s)] = 1;
                rows.push_back(e);
            }
        v.F.steps.push_back(Subspace::span(rows, dim));
    }
    return make_lmhs(std::move(v), std::move(nm));
}

LmhsDatum minimal_witness(const MinimalType& t, const HodgeNumbers& h) {
    const int n = h.n;
    HodgeNumbers residual = h;
    auto take = [&residual](int p) {
        residual.h[static_cast<std::size_t>(residual.n - p)] -= 1;
    };
    LmhsDatum block;
    if (t.kind == MinimalType::Kind::I) {
        if (t.p_o + t.q_o != n || t.p_o >= t.q_o) throw Error("InfeasibleType", "type does not match the weight");
        if (t.q_o - t.p_o == 1) {
            block = atomic_block(n, t.p_o, 1);
            take(t.p_o);
            take(t.q_o);
        } else {
            HodgeNumbers hu{n - 1, std::vector<int>(static_cast<std::size_t>(n), 0)};
            hu.h[static_cast<std::size_t>(n - 1 - t.p_o)] = 1;
            hu.h[static_cast<std::size_t>(n - 1 - (t.q_o - 1))] = 1;
            block = string_block(model_phs(hu), 2);
            take(t.p_o);
            take(t.p_o + 1);
            take(t.q_o);
            take(t.q_o - 1);
        }
    } else {
        if (n % 2 != 0 || n < 2) throw Error("InfeasibleType", "kind II needs even positive weight");
        const int m = n / 2;
        HodgeNumbers hu{n - 2, std::vector<int>(static_cast<std::size_t>(n - 1), 0)};
        hu.h[static_cast<std::size_t>(m - 1)] = 1;
        block = string_block(model_phs(hu), 3);
        take(m - 1);
        take(m);
        take(m + 1);
    }
    for (int x : residual.h)
        if (x < 0) throw Error("InfeasibleType", "Hodge numbers too small for minimal type " + t.label());
    if (residual.total() == 0) return block;
    return direct_sum(block, pure_lmhs(model_phs(residual)));
}

bool ht_gate(const HodgeNumbers& h) {
    const int m = h.n / 2;
    for (int k = 1; k <= m; ++k)
        if (h.at(h.n - k + 1) > h.at(h.n - k)) return false;
    return true;
}

HtPlan ht_plan(const HodgeNumbers& h) {
    if (!h.symmetric() || h.total() <= 0) throw Error("InadmissibleHodgeNumbers", "Hodge numbers must be symmetric with positive total");
    if (!ht_gate(h)) throw Error("GateFailed", "Hodge numbers are not monotone up to the middle");
    HtPlan plan;
    plan.n = h.n;
    const int m = h.n / 2;
    plan.d.push_back(h.at(h.n));
    for (int k = 1; k <= m; ++k) plan.d.push_back(h.at(h.n - k) - h.at(h.n - k + 1));
    return plan;
}

LmhsDatum ht_construct(const HodgeNumbers& h) {
    HtPlan plan = ht_plan(h);
    std::optional<LmhsDatum> out;
    for (std::size_t k = 0; k < plan.d.size(); ++k) {
        if (plan.d[k] == 0) continue;
        LmhsDatum b = atomic_block(h.n, static_cast<int>(k), plan.d[k]);
        out = out ? direct_sum(*out, b) : b;
    }
    return *out;
}

Report cp_orb_check(const DimTable& ig) {
    DimTable t = nonzero(ig);
    Report r;
    std::string bad;
    for (const auto& [k, v] : t) {
        auto [p, q] = k;
        if (p * q < 0 && std::abs(p) != std::abs(q)) bad += "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    r.add("cp_orb.clause1.offdiag", bad.empty(), bad.empty() ? "" : "nonzero I^{p,-q} with p != q: " + bad);
    bad.clear();
    for (const auto& [k, v] : t) {
        auto [p, q] = k;
        if (p == -q && std::abs(p) >= 3 && std::abs(p) % 2 == 1) bad += "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    r.add("cp_orb.clause2.odd", bad.empty(), bad.empty() ? "" : "nonzero I^{p,-p} with odd |p| >= 3: " + bad);
    bad.clear();
    for (const auto& [k, v] : t) {
        auto [p, q] = k;
        if (p + q != 0 && std::abs(p - q) > 2) bad += "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    r.add("cp_orb.clause3.width", bad.empty(), bad.empty() ? "" : "nonzero I^{p,q} off p+q=0 with |p-q| > 2: " + bad);
    bad.clear();
    for (const auto& [k, v] : primitive_dims(t, 0)) {
        auto [p, q] = k;
        if (std::abs(q - p) != 2) continue;
        int length = p + q + 1;
        if (v < 0 || length % 4 != 3)
            bad += "string from (" + std::to_string(p) + "," + std::to_string(q) + ") of length " + std::to_string(length) + ";";
    }
    r.add("cp_orb.clause4.mod4", bad.empty(), bad.empty() ? "" : "strings on |q-p| = 2 must have length 3 mod 4: " + bad);
    return r;
}

PeriodClosedResult period_closed_check(const DimTable& i, int n) {
    PeriodClosedResult res;
    DimTable t = nonzero(i);
    if (is_hodge_tate(t)) {
        res.verdict = "hodge-tate";
        res.report.add("period.hodge_tate", true);
        return res;
    }
    if (n % 2 != 0) {
        res.verdict = "violation";
        res.report.add("period.OddWeightNonHT", false, "odd weight and not Hodge-Tate: not a closed-orbit degeneration");
        return res;
    }
    const int m = n / 2;
    DimTable prim = primitive_dims(t, n);
    std::string a, b, c;
    bool middle_nonzero = false;
    for (const auto& [k, v] : prim) {
        auto [p, q] = k;
        int level = p + q - n;
        std::string at = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
        if (level != 0) {
            if (p != q) a += at;
            if (level % 4 != 2) b += at + " k=" + std::to_string(level) + ";";
        } else {
            bool allowed = (p == m + 1 && q == m - 1) || (p == m - 1 && q == m + 1);
            if (!allowed) c += at;
            if (allowed && v > 0) middle_nonzero = true;
        }
    }
    if (!middle_nonzero && c.empty()) c = "no primitive class at (m+1,m-1)";
    res.report.add("period.clauseA.ht_prim", a.empty(), a.empty() ? "" : "non-Hodge-Tate primitive off the middle row: " + a);
    res.report.add("period.clauseB.mod4", b.empty(), b.empty() ? "" : "primitive level k not 2 mod 4: " + b);
    res.report.add("period.clauseC.middle", c.empty(), c.empty() ? "" : "middle-row primitive outside (m+-1, m-+1): " + c);
    std::string vs;
    for (const auto& [k, v] : t) {
        auto [p, q] = k;
        bool ok = p == q || (p == m - 1 && q == m + 1) || (p == m + 1 && q == m - 1);
        if (!ok) vs += "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    res.report.add("period.vshape", vs.empty(), vs.empty() ? "" : "nodes outside the diagonal and (m+-1, m-+1): " + vs);
    res.verdict = res.report.ok() ? "consistent-with-closed-orbit" : "violation";
    return res;
}

PrincipalFamily parse_principal_family(const std::string& name) {
    if (name == "sp") return PrincipalFamily::Sp;
    if (name == "so_odd") return PrincipalFamily::SoOdd;
    if (name == "so_even_mm") return PrincipalFamily::SoEvenMm;
    if (name == "so_even_m2m") return PrincipalFamily::SoEvenM2m;
    throw Error("UnknownFamily", "unknown principal family '" + name + "'");
}

std::string to_string(PrincipalFamily f) {
    switch (f) {
        case PrincipalFamily::Sp: return "sp";
        case PrincipalFamily::SoOdd: return "so_odd";
        case PrincipalFamily::SoEvenMm: return "so_even_mm";
        case PrincipalFamily::SoEvenM2m: return "so_even_m2m";
    }
    return "";
}

LmhsDatum principal_lmhs(PrincipalFamily f, int size) {
    if (size < 1) throw Error("ParityViolation", "size parameter must be positive");
    bool with_w = f == PrincipalFamily::SoEvenMm || f == PrincipalFamily::SoEvenM2m;
    if (with_w && size % 2 != 0) throw Error("ParityViolation", "so_even families need m even");
    int top = 0;
    switch (f) {
        case PrincipalFamily::Sp: top = 2 * size - 1; break;
        case PrincipalFamily::SoOdd: top = 2 * size; break;
        default: top = 2 * size - 2; break;
    }
    const std::size_t off = with_w ? 1 : 0;
    const std::size_t dim = static_cast<std::size_t>(top + 1) + off;
    HodgeDatum v;
    v.dim = dim;
    v.weight = top;
    v.Q = Matrix(dim, dim);
    Matrix n(dim, dim);
    if (with_w) v.Q(0, 0) = 1;
    for (int a = 0; a <= top; ++a) {
        v.Q(off + a, off + (top - a)) = (a % 2 == 0) ? 1 : -1;
        if (a < top) n(off + a + 1, off + a) = 1;
    }
    v.F.ambient = dim;
    v.F.lo = 0;
    const int m = size;
    for (int p = 0; p <= top; ++p) {
        std::vector<Vec> rows;
        if (with_w && p <= m - 1) {
            Vec w(dim);
            w[0] = 1;
            rows.push_back(w);
        }
        for (int a = 0; a <= top - p; ++a) {
            Vec e(dim);
            e[off + a] = 1;
            rows.push_back(e);
        }
        v.F.steps.push_back(Subspace::span(rows, dim));
    }
    return make_lmhs(std::move(v), std::move(n));
}

RootSystem principal_root_system(PrincipalFamily f, int size) {
    switch (f) {
        case PrincipalFamily::Sp: return build_root_system('C', size);
        case PrincipalFamily::SoOdd: return build_root_system('B', size);
        default: return build_root_system('D', size);
    }
}

IVec principal_characteristic_vector(PrincipalFamily f, int size, const LmhsDatum& l) {
    RootSystem rs = principal_root_system(f, size);
    return characteristic_vector_from_eigenvalues(rs, standard_weights(rs), neutral_eigenvalues(l.N));
}

Matrix normal_form_polarization(std::size_t d, int n) {
    Matrix q(d, d);
    const std::size_t c = d / 2;
    for (std::size_t i = 0; i < c; ++i) {
        q(i, c + i) = 1;
        q(c + i, i) = (n % 2 == 0) ? 1 : -1;
    }
    if (d % 2 == 1) q(d - 1, d - 1) = 1;
    return q;
}

std::vector<NormalForm> normal_forms(std::size_t d, int n) {
    std::vector<NormalForm> out;
    const std::size_t c = d / 2;
    // e^i_j maps e_i to e_j: matrix entry (j, i).
    auto e = [d](std::size_t i, std::size_t j) { return Matrix::unit(d, j, i); };
    auto lbl = [](const std::string& s, std::size_t i, std::size_t j) {
        return s + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
    };
    if (n % 2 == 1) {
        if (d % 2 != 0) return out;
        for (std::size_t i = 0; i < c; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                if (i != j) out.push_back({"rtN1", lbl("e^i_j-e^{c+j}_{c+i}", i, j), e(i, j) - e(c + j, c + i)});
                if (i <= j) {
                    out.push_back({"rtN1", lbl("e^{c+i}_j+e^{c+j}_i", i, j), e(c + i, j) + e(c + j, i)});
                    out.push_back({"rtN1", lbl("e^i_{c+j}+e^j_{c+i}", i, j), e(i, c + j) + e(j, c + i)});
                }
            }
        for (std::size_t i = 0; i < c; ++i) {
            out.push_back({"rtN1", lbl("e^i_{c+i}", i, i), e(i, c + i)});
            out.push_back({"rtN1", lbl("e^{c+i}_i", i, i), e(c + i, i)});
        }
        return out;
    }
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            if (i != j) out.push_back({"rtN2", lbl("e^i_j-e^{c+j}_{c+i}", i, j), e(i, j) - e(c + j, c + i)});
            if (i < j) {
                out.push_back({"rtN2", lbl("e^{c+i}_j-e^{c+j}_i", i, j), e(c + i, j) - e(c + j, i)});
                out.push_back({"rtN2", lbl("e^i_{c+j}-e^j_{c+i}", i, j), e(i, c + j) - e(j, c + i)});
            }
        }
    if (d % 2 == 1) {
        const std::size_t last = d - 1;
        for (std::size_t i = 0; i < c; ++i) {
            out.push_back({"rtN3", lbl("e^d_i-e^{c+i}_d", i, i), e(last, i) - e(c + i, last)});
            out.push_back({"rtN3", lbl("e^d_{c+i}-e^i_d", i, i), e(last, c + i) - e(i, last)});
        }
    }
    return out;
}

LmhsDatum closed_orbit_instance_n2() {
    HodgeNumbers pure{2, {1, 0, 1}};
    return direct_sum(atomic_block(2, 0, 1), pure_lmhs(model_phs(pure)));
}

LmhsDatum synthetic_k4_instance() {
    HodgeNumbers pure{4, {0, 1, 0, 1, 0}};
    return direct_sum(atomic_block(4, 0, 1), pure_lmhs(model_phs(pure)));
}

std::optional<LmhsDatum> closed_orbit_construct(const HodgeNumbers& h) {
    if (!h.symmetric() || h.n % 2 != 0 || h.n < 2) return std::nullopt;
    const int n = h.n, m = n / 2;
    // d[k] strings run from (n-k,n-k) down to (k,k); their primitive level is n - 2k.
    std::vector<int> d(static_cast<std::size_t>(m), 0);
    for (int k = 0; k < m - 1; ++k) d[static_cast<std::size_t>(k)] = h.at(n - k) - h.at(n - k + 1);
    d[static_cast<std::size_t>(m - 1)] = h.at(m) - h.at(m + 2);
    const int c = h.at(m + 1) - h.at(m);
    if (c < 1) return std::nullopt;
    for (int k = 0; k < m; ++k) {
        int dk = d[static_cast<std::size_t>(k)];
        if (dk < 0 || (dk > 0 && (n - 2 * k) % 4 != 2)) return std::nullopt;
    }
    HodgeNumbers pure{n, std::vector<int>(static_cast<std::size_t>(n + 1), 0)};
    pure.h[static_cast<std::size_t>(m - 1)] = c;
    pure.h[static_cast<std::size_t>(m + 1)] = c;
    LmhsDatum out = pure_lmhs(model_phs(pure));
    for (int k = 0; k < m; ++k)
        if (d[static_cast<std::size_t>(k)] > 0) out = direct_sum(atomic_block(n, k, d[static_cast<std::size_t>(k)]), out);
    return out;
}

std::vector<HodgeNumbers> enumerate_hodge_numbers(int n, int max_entry, int max_dim) {
    std::vector<HodgeNumbers> out;
    const int half = n / 2;  // free entries h^{n,0}, …, h^{n-half,half}
    std::vector<int> e(static_cast<std::size_t>(half + 1), 0);
    while (true) {
        HodgeNumbers h{n, std::vector<int>(static_cast<std::size_t>(n + 1), 0)};
        for (int k = 0; k <= half; ++k) {
            h.h[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k)];
            h.h[static_cast<std::size_t>(n - k)] = e[static_cast<std::size_t>(k)];
        }
        int t = h.total();
        if (t >= 1 && t <= max_dim) out.push_back(h);
        std::size_t i = 0;
        while (i < e.size() && e[i] == max_entry) e[i++] = 0;
        if (i == e.size()) break;
        ++e[i];
    }
    return out;
}

}  // namespace hodge
