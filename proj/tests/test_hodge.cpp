#include <doctest.h>

#include "hodge/catalog.hpp"
#include "hodge/classifier.hpp"
#include "hodge/errors.hpp"
#include "hodge/g2.hpp"
#include "hodge/hodge.hpp"

using namespace hodge;

namespace {

/** @brief Weight-1 datum on C^2 with Q = [[0,1],[-1,0]] and F^1 spanned by (1, z). */
HodgeDatum weight_one(const Gq& z) {
    HodgeDatum d;
    d.dim = 2;
    d.weight = 1;
    d.Q = Matrix::from_ints({{0, 1}, {-1, 0}});
    d.F.ambient = 2;
    d.F.lo = 0;
    d.F.steps = {Subspace::full(2), Subspace::span({Vec{Gq(1), z}}, 2)};
    return d;
}

HodgeNumbers numbers(int n, std::vector<int> h) { return HodgeNumbers{n, std::move(h)}; }

}  // namespace

TEST_CASE("weight zero decomposition is a single piece") {
    HodgeDatum d;
    d.dim = 3;
    d.weight = 0;
    d.Q = Matrix::identity(3);
    d.F.ambient = 3;
    d.F.steps = {Subspace::full(3)};
    auto pieces = hodge_decomposition(d);
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0].p == 0);
    CHECK(pieces[0].space.is_full());
    CHECK(check_hr1(d));
    CHECK(validate_phs(d).ok());
}

TEST_CASE("weight one: decomposition and both Riemann bilinear relations") {
    HodgeDatum good = weight_one(Gq::i());
    auto pieces = hodge_decomposition(good);
    REQUIRE(pieces.size() == 2);
    CHECK(pieces[1].p == 1);
    CHECK(pieces[1].space == Subspace::span({Vec{Gq(1), Gq::i()}}, 2));
    CHECK(pieces[0].space == Subspace::span({Vec{Gq(1), -Gq::i()}}, 2));
    CHECK(check_hr1(good));
    CHECK(check_hr2(good));
    CHECK(hodge_numbers(good) == numbers(1, {1, 1}));

    HodgeDatum flipped = weight_one(-Gq::i());
    CHECK(check_hr1(flipped));
    CHECK_FALSE(check_hr2(flipped));
    Report r = validate_phs(flipped);
    CHECK(r.passed("hr1"));
    CHECK_FALSE(r.passed("hr2"));
    CHECK(r.passed("spans"));

    HodgeDatum real_line = weight_one(Gq(0));
    CHECK_FALSE(check_hr1(real_line));
    CHECK_THROWS_AS(check_hr2(real_line), Error);
    Report rr = validate_phs(real_line);
    CHECK_FALSE(rr.passed("hr1"));
    CHECK_FALSE(rr.passed("spans"));
}

TEST_CASE("structural defects are reported") {
    HodgeDatum d = weight_one(Gq::i());
    d.Q = Matrix::identity(2);  // symmetric form in odd weight
    CHECK_FALSE(validate_phs(d).passed("structure"));
    d = weight_one(Gq::i());
    d.Q = Matrix::from_ints({{0, 0}, {0, 0}});
    CHECK_FALSE(validate_phs(d).passed("structure"));
}

TEST_CASE("model structures validate and reproduce their Hodge numbers") {
    HodgeDatum ell = model_phs(numbers(1, {1, 1}));
    CHECK(ell.dim == 2);
    CHECK(validate_phs(ell).ok());

    HodgeDatum k3ish = model_phs(numbers(2, {1, 2, 1}));
    CHECK(k3ish.dim == 4);
    CHECK(validate_phs(k3ish).ok());
    CHECK(hodge_numbers(k3ish) == numbers(2, {1, 2, 1}));

    // (2,1,2) carries a PHS even though it later fails the Hodge–Tate gate
    HodgeDatum nongate = model_phs(numbers(2, {2, 1, 2}));
    CHECK(validate_phs(nongate).ok());
    CHECK_FALSE(ht_gate(numbers(2, {2, 1, 2})));

    CHECK_THROWS_AS(model_phs(numbers(2, {1, 0, 2})), Error);
    CHECK_THROWS_AS(model_phs(numbers(1, {0, 0})), Error);
}

TEST_CASE("model structures: exhaustive sweep over small Hodge numbers") {
    int count = 0;
    for (int n = 0; n <= 7; ++n)
        for (const auto& h : enumerate_hodge_numbers(n, 2, 8)) {
            HodgeDatum d = model_phs(h);
            CAPTURE(n);
            CHECK(validate_phs(d).ok());
            CHECK(hodge_numbers(d) == h);
            CHECK(filtration_hodge_numbers(d.F, n) == h);
            auto pieces = hodge_decomposition(d);
            for (const auto& a : pieces)
                for (const auto& b : pieces)
                    if (a.p == b.q) CHECK(conj(a.space) == b.space);
            ++count;
        }
    CHECK(count > 50);
}

TEST_CASE("G2 and F4 examples have the expected Hodge numbers") {
    HodgeDatum g2 = g2_open_lmhs().hodge;
    CHECK(validate_phs(g2).ok());
    CHECK(hodge_numbers(g2) == numbers(6, {1, 1, 1, 1, 1, 1, 1}));

    // the F4 weight-16 example: read h^{p,16-p} off the limit splitting
    for (const auto* e : catalog_lookup("F4")) {
        json v = e->compute()["V"];
        std::vector<int> h(17, 0);
        for (const auto& node : v) h[static_cast<std::size_t>(16 - node[0].get<int>())] += node[2].get<int>();
        std::vector<int> expect{1, 1, 1, 1};
        expect.insert(expect.end(), 9, 2);
        expect.insert(expect.end(), 4, 1);
        CHECK(h == expect);
    }
}
