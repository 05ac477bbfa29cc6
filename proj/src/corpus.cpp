#include "hodge/corpus.hpp"

#include <algorithm>
#include <random>

#include "hodge/errors.hpp"
#include "hodge/json_io.hpp"

namespace hodge {

namespace {

std::string h_label(const HodgeNumbers& h) {
    std::string s = "n=" + std::to_string(h.n) + ",h=";
    for (std::size_t i = 0; i < h.h.size(); ++i) s += (i ? "." : "") + std::to_string(h.h[i]);
    return s;
}

bool same_filtration(const HodgeFiltration& a, const HodgeFiltration& b, int lo, int hi) {
    for (int p = lo; p <= hi; ++p)
        if (a.at(p) != b.at(p)) return false;
    return true;
}

class Checker {
public:
    Checker(const CorpusCase& c, CorpusResult& out) : case_(c), out_(out) {}

    void check(const std::string& id, bool ok, const std::string& message = {}) {
        ++out_.checks;
        if (!ok) out_.failures.push_back(case_.id + ": " + id + ": " + (message.empty() ? "failed" : message));
    }
    void report(const std::string& prefix, const Report& r) {
        for (const auto& c : r.clauses) check(prefix + c.name, c.ok, c.message);
    }

private:
    const CorpusCase& case_;
    CorpusResult& out_;
};

}  // namespace

std::string CorpusResult::first_failure() const {
    if (failures.empty()) return {};
    const std::string& f = failures.front();
    auto a = f.find(": ");
    auto b = f.find(": ", a + 2);
    return f.substr(a + 2, b - a - 2);
}

std::vector<CorpusCase> generate_corpus(const CorpusOptions& opts) {
    std::vector<CorpusCase> out;
    for (int n = 1; n <= opts.min_max_weight; ++n)
        for (const auto& h : enumerate_hodge_numbers(n, 2, 1 << 20))
            for (const auto& t : minimal_types(h)) {
                CorpusCase c;
                c.id = "minimal/" + h_label(h) + "/" + t.label();
                c.kind = CaseKind::MinimalWitness;
                c.datum = minimal_witness(t, h);
                c.type = t;
                c.h = h;
                out.push_back(std::move(c));
            }
    for (int n = 1; n < opts.ht_max_dim; ++n)
        for (const auto& h : enumerate_hodge_numbers(n, 3, opts.ht_max_dim)) {
            if (h.at(n) == 0 || !ht_gate(h)) continue;
            CorpusCase c;
            c.id = "hodge-tate/" + h_label(h);
            c.kind = CaseKind::HodgeTate;
            c.datum = ht_construct(h);
            c.h = h;
            out.push_back(std::move(c));
        }
    for (PrincipalFamily f : {PrincipalFamily::Sp, PrincipalFamily::SoOdd, PrincipalFamily::SoEvenMm, PrincipalFamily::SoEvenM2m})
        for (int s = 1; s <= opts.principal_max; ++s) {
            bool even_family = f == PrincipalFamily::SoEvenMm || f == PrincipalFamily::SoEvenM2m;
            if (even_family && s % 2 != 0) continue;
            CorpusCase c;
            c.id = "principal/" + to_string(f) + "/" + std::to_string(s);
            c.kind = CaseKind::Principal;
            c.datum = principal_lmhs(f, s);
            c.family = f;
            c.size = s;
            out.push_back(std::move(c));
        }
    std::mt19937_64 rng(opts.seed);
    std::shuffle(out.begin(), out.end(), rng);
    if (opts.limit && *opts.limit < out.size()) out.resize(*opts.limit);
    return out;
}

void verify_case(const CorpusCase& c, const CorpusOptions& opts, std::uint64_t sample_seed, CorpusResult& out) {
    Checker ck(c, out);
    const LmhsDatum& l = c.datum;
    const int n = l.hodge.weight;
    try {
        // Validator, with the polarization sign under test.
        ck.report("lmhs.", validate_lmhs(l, ValidateOptions{opts.sign}));

        // Weight filtration and hard Lefschetz.
        std::string err = check_weight_properties(l.N, l.W);
        ck.check("hard_lefschetz", err.empty(), err);

        // Deligne splitting: reconstruction, agreement of both algorithms, N-strings, R-split.
        Bigrading b = deligne_splitting(l);
        err = check_reconstruction(l, b);
        ck.check("deligne.reconstruction", err.empty(), err);
        Bigrading full = deligne_splitting_full(l);
        ck.check("deligne.full_formula_agrees", full.dims() == b.dims(), "fast path and full formula disagree");
        err.clear();
        for (const auto& node : b.nodes)
            if (!is_subspace(apply(l.N, node.space), b.at(node.p - 1, node.q - 1)))
                err = "N I^{" + std::to_string(node.p) + "," + std::to_string(node.q) + "} not in I^{p-1,q-1}";
        ck.check("nstring.law", err.empty(), err);
        ck.check("rsplit.symmetry", is_r_split(b), "conj I^{p,q} != I^{q,p}");

        // Reduced limit.
        ck.report("reduced_limit.", check_reduced_limit(l, reduced_limit(b, n)));

        // Nilpotent-orbit sampling on the disc.
        std::mt19937_64 rng(sample_seed);
        std::vector<mpq_class> ys = {1, 2, 10};
        const long num = static_cast<long>(rng() % 97 + 3);
        const long den = static_cast<long>(rng() % 5 + 1);
        ys.push_back(mpq_class(num) / den);
        ck.report("disc_sample.", disc_sample(l, ys));

        // Adjoint structure on End(V, Q).
        AdjointLmhs a = adjoint_lmhs(l);
        DimTable gdims = a.I_g.dims();
        ck.check("adjoint.ht_iff", is_hodge_tate(b) == is_hodge_tate(gdims),
                 "V and g disagree about being Hodge-Tate");
        DiagonalLevi levi = diagonal_levi(a);
        ck.check("levi.contains_n", levi.contains_n, "N is not in the diagonal Levi subalgebra");
        ck.check("levi.hodge_tate", levi.hodge_tate, "diagonal Levi subalgebra is not Hodge-Tate");

        // Round trip through JSON.
        LmhsDatum back = lmhs_from_json(parse_json(to_json(l).dump()));
        bool same = back.hodge.Q == l.hodge.Q && back.N == l.N && back.W == l.W && back.center() == l.center() &&
                    same_filtration(back.hodge.F, l.hodge.F, 0, n + 1);
        ck.check("json.roundtrip", same, "datum changed after serialization");

        if (c.h) ck.check("hodge_numbers", filtration_hodge_numbers(l.hodge.F, n) == *c.h, "Hodge numbers differ from the request");

        switch (c.kind) {
            case CaseKind::MinimalWitness: {
                ck.check("minimal.i_table", nonzero(b.dims()) == c.type->i_table, "witness bigrading differs from i-rules");
                int idx = nilpotency_index(l.N);
                bool order_ok = c.type->kind == MinimalType::Kind::I ? idx == 2 : idx == 3;
                ck.check("minimal.n_order", order_ok && rank(l.N) <= 2, "unexpected nilpotency index or rank");
                break;
            }
            case CaseKind::HodgeTate:
                ck.check("ht.is_hodge_tate", is_hodge_tate(b) && is_hodge_tate(gdims), "construction is not Hodge-Tate");
                ck.report("ht.", cp_orb_check(gdims));
                break;
            case CaseKind::Principal: {
                IVec cv = principal_characteristic_vector(*c.family, c.size, l);
                ck.check("principal.characteristic_vector",
                         std::all_of(cv.begin(), cv.end(), [](int x) { return x == 2; }), "not all entries are 2");
                ck.check("principal.hodge_tate", is_hodge_tate(b), "principal LMHS is not Hodge-Tate");
                break;
            }
        }
    } catch (const Error& e) {
        ck.check("exception", false, e.what());
    }
}

CorpusResult verify_corpus(const CorpusOptions& opts) {
    CorpusResult out;
    std::vector<CorpusCase> cases = generate_corpus(opts);
    std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
    for (const auto& c : cases) {
        verify_case(c, opts, rng(), out);
        ++out.cases;
    }
    return out;
}

}  // namespace hodge
