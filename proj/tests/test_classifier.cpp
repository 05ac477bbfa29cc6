#include <doctest.h>

#include <set>
#include <string>

#include "hodge/classifier.hpp"
#include "hodge/errors.hpp"
#include "hodge/json_io.hpp"

using namespace hodge;

namespace {

const json& figures() {
    static const json j = read_json_file(std::string(HODGE_GOLDEN_DIR) + "/figures.json");
    return j;
}

HodgeNumbers numbers(int n, std::vector<int> h) { return HodgeNumbers{n, std::move(h)}; }

std::set<std::pair<int, int>> support(const DimTable& t) {
    std::set<std::pair<int, int>> s;
    for (const auto& [pq, k] : t)
        if (k != 0) s.insert(pq);
    return s;
}

const MinimalType* find_type(const std::vector<MinimalType>& ts, const std::string& label) {
    for (const auto& t : ts)
        if (t.label() == label) return &t;
    return nullptr;
}

/** @brief 0 when N² = 0 with rank ≤ 2, 1 when N³ = 0, N² ≠ 0, rank 2, otherwise -1. */
int normal_form_class(const Matrix& n) {
    const std::size_t r = rank(n);
    Matrix n2 = n * n;
    if (n2.is_zero() && r <= 2) return 0;
    if (!n2.is_zero() && (n2 * n).is_zero() && r == 2) return 1;
    return -1;
}

}  // namespace

TEST_CASE("minimal types in weight one") {
    for (int g = 1; g <= 3; ++g) {
        auto ts = minimal_types(numbers(1, {g, g}));
        REQUIRE(ts.size() == 1);
        CHECK(ts[0].kind == MinimalType::Kind::I);
        DimTable expect{{{0, 0}, 1}, {{1, 1}, 1}, {{0, 1}, g - 1}, {{1, 0}, g - 1}};
        CHECK(ts[0].i_table == nonzero(expect));
    }
    std::set<std::pair<int, int>> printed;
    for (const auto& pq : figures()["min-pd"]["n1-I01"]) printed.insert({pq[0].get<int>(), pq[1].get<int>()});
    CHECK(support(minimal_types(numbers(1, {2, 2}))[0].i_table) == printed);
}

TEST_CASE("minimal types in weight three with all Hodge numbers one") {
    auto ts = minimal_types(numbers(3, {1, 1, 1, 1}));
    REQUIRE(ts.size() == 2);
    const MinimalType* a = find_type(ts, "I(0,3)");
    const MinimalType* b = find_type(ts, "I(1,2)");
    REQUIRE(a != nullptr);
    REQUIRE(b != nullptr);
    CHECK(support(a->i_table) == std::set<std::pair<int, int>>{{0, 2}, {1, 3}, {3, 1}, {2, 0}});
    CHECK(support(b->i_table) == std::set<std::pair<int, int>>{{0, 3}, {1, 1}, {2, 2}, {3, 0}});
}

TEST_CASE("kind II needs an odd middle Hodge number") {
    auto ts = minimal_types(numbers(2, {1, 2, 1}));
    CHECK(find_type(ts, "I(0,2)") != nullptr);
    CHECK(find_type(ts, "II") == nullptr);
    auto odd = minimal_types(numbers(2, {1, 1, 1}));
    CHECK(find_type(odd, "II") != nullptr);
    CHECK(minimal_types(numbers(2, {0, 3, 0})).empty());
}

TEST_CASE("i-tables collapse back to the Hodge numbers") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& h : enumerate_hodge_numbers(n, 2, 10))
            for (const auto& t : minimal_types(h)) {
                int total = 0;
                for (const auto& [pq, k] : t.i_table) {
                    CHECK(k > 0);
                    CHECK(t.i_table.at({pq.second, pq.first}) == k);
                    total += k;
                }
                CHECK(total == h.total());
            }
}

TEST_CASE("minimal witnesses") {
    HodgeNumbers h1 = numbers(1, {1, 1});
    LmhsDatum w1 = minimal_witness(minimal_types(h1)[0], h1);
    CHECK(!w1.N.is_zero());
    CHECK((w1.N * w1.N).is_zero());
    CHECK(rank(w1.N) == 1);
    CHECK(deligne_splitting(w1).dims() == DimTable{{{0, 0}, 1}, {{1, 1}, 1}});

    HodgeNumbers h2 = numbers(2, {1, 1, 1});
    const MinimalType* ii = find_type(minimal_types(h2), "II");
    REQUIRE(ii != nullptr);
    LmhsDatum w2 = minimal_witness(*ii, h2);
    CHECK(normal_form_class(w2.N) == 1);
    CHECK(deligne_splitting(w2).dims() == DimTable{{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}});

    MinimalType bogus;
    bogus.kind = MinimalType::Kind::I;
    bogus.p_o = 0;
    bogus.q_o = 2;
    CHECK_THROWS_AS(minimal_witness(bogus, numbers(2, {0, 3, 0})), Error);

    std::vector<mpq_class> ys{1, 2, 10};
    int checked = 0;
    for (int n = 1; n <= 4; ++n)
        for (const auto& h : enumerate_hodge_numbers(n, 2, 8))
            for (const auto& t : minimal_types(h)) {
                CAPTURE(n);
                CAPTURE(t.label());
                LmhsDatum w = minimal_witness(t, h);
                CHECK(validate_lmhs(w).ok());
                CHECK(disc_sample(w, ys).ok());
                CHECK(nonzero(deligne_splitting(w).dims()) == t.i_table);
                CHECK(normal_form_class(w.N) == (t.kind == MinimalType::Kind::I ? 0 : 1));
                ++checked;
            }
    CHECK(checked > 20);
}

TEST_CASE("Hodge–Tate gate, plan and constructor") {
    CHECK(ht_gate(numbers(2, {1, 1, 1})));
    CHECK_FALSE(ht_gate(numbers(2, {2, 1, 2})));
    CHECK(ht_gate(numbers(4, {1, 2, 4, 2, 1})));
    CHECK_THROWS_AS(ht_construct(numbers(2, {2, 1, 2})), Error);

    CHECK(ht_plan(numbers(2, {1, 1, 1})).d == std::vector<int>{1, 0});
    CHECK(ht_plan(numbers(2, {1, 2, 1})).d == std::vector<int>{1, 1});
    CHECK(ht_plan(numbers(1, {3, 3})).d == std::vector<int>{3});

    LmhsDatum a = ht_construct(numbers(2, {1, 2, 1}));
    CHECK(deligne_splitting(a).dims() == DimTable{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}});
    LmhsDatum g = ht_construct(numbers(1, {3, 3}));
    CHECK(rank(g.N) == 3);

    for (int n = 1; n <= 5; ++n)
        for (const auto& h : enumerate_hodge_numbers(n, 3, 8)) {
            if (!ht_gate(h)) continue;
            CAPTURE(n);
            LmhsDatum l = ht_construct(h);
            CHECK(validate_lmhs(l).ok());
            Bigrading b = deligne_splitting(l);
            CHECK(is_hodge_tate(b));
            for (int p = 0; p <= n; ++p) CHECK(b.dims()[{p, p}] == h.at(p));
            AdjointLmhs ad = adjoint_lmhs(l);
            CHECK(is_hodge_tate(ad.I_g));
            CHECK(cp_orb_check(ad.I_g.dims()).ok());
            CHECK(period_closed_check(b.dims(), n).verdict == "hodge-tate");
        }
}

TEST_CASE("closed-orbit constraints on adjoint bigradings") {
    DimTable b = dims_from_json(figures()["c_orb"]["b"]);
    Report r = cp_orb_check(b);
    CHECK(r.ok());
    CHECK(r.clauses.size() == 4);

    DimTable odd = b;
    odd[{3, -3}] = 1;
    odd[{-3, 3}] = 1;
    Report ro = cp_orb_check(odd);
    CHECK_FALSE(ro.passed("cp_orb.clause2.odd"));

    DimTable off = b;
    off[{2, -1}] = 1;
    off[{-2, 1}] = 1;
    CHECK_FALSE(cp_orb_check(off).passed("cp_orb.clause1.offdiag"));

    DimTable wide = b;
    wide[{3, 0}] = 1;
    wide[{0, -3}] = 1;
    CHECK_FALSE(cp_orb_check(wide).passed("cp_orb.clause3.width"));
}

TEST_CASE("closed-orbit constraints for period domains") {
    // n = 2, h = (2,1,2): h^{2,0} = i^{2,0}_prim + i^{2,2}_prim and h^{1,1} = i^{2,2}_prim
    LmhsDatum c = closed_orbit_instance_n2();
    CHECK(validate_lmhs(c).ok());
    DimTable dims = deligne_splitting(c).dims();
    PeriodClosedResult res = period_closed_check(dims, 2);
    CHECK(res.verdict == "consistent-with-closed-orbit");
    CHECK(res.report.ok());
    DimTable prim = primitive_dims(dims, 2);
    HodgeNumbers h = filtration_hodge_numbers(c.hodge.F, 2);
    CHECK(h == numbers(2, {2, 1, 2}));
    CHECK(h.at(2) == prim[{2, 0}] + prim[{2, 2}]);
    CHECK(h.at(1) == prim[{2, 2}]);

    LmhsDatum k4 = synthetic_k4_instance();
    CHECK(validate_lmhs(k4).ok());
    PeriodClosedResult bad = period_closed_check(deligne_splitting(k4).dims(), 4);
    CHECK(bad.verdict == "violation");
    CHECK_FALSE(bad.report.passed("period.clauseB.mod4"));

    HodgeNumbers h3 = numbers(3, {1, 1, 1, 1});
    LmhsDatum w = minimal_witness(*find_type(minimal_types(h3), "I(0,3)"), h3);
    PeriodClosedResult oddw = period_closed_check(deligne_splitting(w).dims(), 3);
    CHECK(oddw.verdict == "violation");
    CHECK(oddw.report.first_failure() == "period.OddWeightNonHT");

    auto built = closed_orbit_construct(numbers(2, {2, 1, 2}));
    REQUIRE(built.has_value());
    CHECK(validate_lmhs(*built).ok());
    CHECK(period_closed_check(deligne_splitting(*built).dims(), 2).verdict == "consistent-with-closed-orbit");
    CHECK_FALSE(closed_orbit_construct(numbers(3, {1, 1, 1, 1})).has_value());
}

TEST_CASE("principal nilpotent families") {
    LmhsDatum sp1 = principal_lmhs(PrincipalFamily::Sp, 1);
    CHECK(sp1.hodge.dim == 2);
    CHECK(sp1.hodge.weight == 1);
    CHECK(validate_lmhs(sp1).ok());

    LmhsDatum so1 = principal_lmhs(PrincipalFamily::SoOdd, 1);
    CHECK(so1.hodge.weight == 2);
    CHECK(filtration_hodge_numbers(so1.hodge.F, 2) == numbers(2, {1, 1, 1}));
    CHECK(nilpotency_index(so1.N) == 3);

    LmhsDatum mm = principal_lmhs(PrincipalFamily::SoEvenMm, 2);
    CHECK(mm.hodge.weight == 2);
    CHECK(filtration_hodge_numbers(mm.hodge.F, 2) == numbers(2, {1, 2, 1}));
    Matrix e = Matrix::identity(4);
    // basis w, v, Nv, N^2 v: I^{1,1} = span{w, Nv}
    CHECK(deligne_splitting(mm).at(1, 1) == Subspace::span(select_rows(e, {0, 2})));
    CHECK_THROWS_AS(principal_lmhs(PrincipalFamily::SoEvenMm, 3), Error);

    CHECK(parse_principal_family("so_even_m2m") == PrincipalFamily::SoEvenM2m);
    CHECK(to_string(PrincipalFamily::SoOdd) == "so_odd");
    CHECK_THROWS(parse_principal_family("gl"));

    for (auto f : {PrincipalFamily::Sp, PrincipalFamily::SoOdd})
        for (int s = 1; s <= 3; ++s) {
            LmhsDatum l = principal_lmhs(f, s);
            CHECK(validate_lmhs(l).ok());
            IVec c = principal_characteristic_vector(f, s, l);
            CHECK(c == IVec(static_cast<std::size_t>(principal_root_system(f, s).rank), 2));
        }
}

TEST_CASE("root-vector normal forms") {
    for (std::size_t d = 2; d <= 5; ++d)
        for (int n : {1, 2}) {
            if (n % 2 == 1 && d % 2 == 1) continue;
            Matrix q = normal_form_polarization(d, n);
            for (const auto& nf : normal_forms(d, n)) {
                CAPTURE(nf.label);
                CHECK((transpose(nf.n) * q + q * nf.n).is_zero());
                if (nf.family == "rtN3") {
                    CHECK(normal_form_class(nf.n) == 1);
                    CHECK(n % 2 == 0);
                    CHECK(d % 2 == 1);
                } else {
                    CHECK(normal_form_class(nf.n) == 0);
                }
            }
        }
}

TEST_CASE("Hodge number enumeration") {
    auto hs = enumerate_hodge_numbers(2, 1, 3);
    CHECK(hs.size() == 3);
    for (const auto& h : enumerate_hodge_numbers(3, 2, 8)) {
        CHECK(h.symmetric());
        CHECK(h.total() >= 1);
        CHECK(h.total() <= 8);
    }
}
