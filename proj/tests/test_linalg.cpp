#include <doctest.h>

#include <functional>
#include <random>
#include <vector>

#include "hodge/errors.hpp"
#include "hodge/subspace.hpp"

using namespace hodge;

namespace {

/** @brief Laplace expansion along the first row (independent of elimination). */
Gq laplace_det(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Gq acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        Matrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        Gq term = m(0, j) * laplace_det(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

/** @brief Rank as the size of the largest nonvanishing minor. */
std::size_t minor_rank(const Matrix& m) {
    std::size_t best = 0;
    const std::size_t k_max = std::min(m.rows(), m.cols());
    for (std::size_t k = 1; k <= k_max; ++k) {
        bool found = false;
        std::vector<std::size_t> rs, cs;
        std::function<void(std::size_t, std::size_t)> pick_cols;
        std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t start, std::size_t left) {
            if (found) return;
            if (left == 0) {
                pick_cols(0, k);
                return;
            }
            for (std::size_t r = start; r < m.rows(); ++r) {
                rs.push_back(r);
                pick_rows(r + 1, left - 1);
                rs.pop_back();
            }
        };
        pick_cols = [&](std::size_t start, std::size_t left) {
            if (found) return;
            if (left == 0) {
                Matrix sub(k, k);
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(rs[a], cs[b]);
                if (!laplace_det(sub).is_zero()) found = true;
                return;
            }
            for (std::size_t c = start; c < m.cols(); ++c) {
                cs.push_back(c);
                pick_cols(c + 1, left - 1);
                cs.pop_back();
            }
        };
        pick_rows(0, k);
        if (found) best = k;
    }
    return best;
}

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, bool complex, int spread = 2) {
    std::uniform_int_distribution<int> d(-spread, spread);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            long re = d(rng);
            long im = complex ? d(rng) : 0;
            m(i, j) = Gq(re, im);
        }
    return m;
}

/** @brief Strictly upper triangular random matrix, conjugated by a random unimodular change of basis. */
Matrix random_nilpotent(std::mt19937& rng, std::size_t n) {
    Matrix u(n, n);
    std::uniform_int_distribution<int> d(-2, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) u(i, j) = Gq(d(rng), d(rng));
    Matrix p = Matrix::identity(n);
    for (std::size_t i = 0; i + 1 < n; ++i) p(i + 1, i) = d(rng);
    return p * u * inverse(p);
}

}  // namespace

TEST_CASE("gaussian rationals print and parse canonically") {
    CHECK(Gq::parse("3").to_string() == "3");
    CHECK(Gq::parse("-1/2*i").to_string() == "-1/2*i");
    CHECK(Gq::parse("2+1/3*i").to_string() == "2+1/3*i");
    CHECK(Gq::parse("4/6") == Gq(mpq_class(2, 3)));
    CHECK(Gq::parse("i") == Gq::i());
    CHECK(Gq::parse("-i") == -Gq::i());
    CHECK(Gq(0).to_string() == "0");
    CHECK_THROWS_AS(Gq::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Gq::parse("abc"), ParseError);
    CHECK(Gq::i() * Gq::i() == Gq(-1));
    CHECK(Gq::i_pow(-1) == -Gq::i());
    CHECK(Gq::i_pow(6) == Gq(-1));
    CHECK((Gq(1, 1) / Gq(1, -1)) == Gq::i());
    CHECK_THROWS(Gq(1) / Gq(0));
}

TEST_CASE("rref of the identity and of a scaled row") {
    CHECK(rref(Matrix::identity(3)) == Matrix::identity(3));
    CHECK(rref(Matrix::from_ints({{2, 4}})) == Matrix::from_ints({{1, 2}}));
    CHECK(rref(Matrix::from_ints({{1, 2}, {2, 4}})).rows() == 1);
}

TEST_CASE("rank agrees with the minor-expansion oracle on random 4x4 matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Matrix m = random_matrix(rng, 4, 4, trial % 2 == 1, 1);
        // force low rank in some trials by copying a row combination
        if (trial % 3 == 0)
            for (std::size_t j = 0; j < 4; ++j) m(3, j) = m(0, j) + Gq(2) * m(1, j);
        Matrix r = rref(m);
        CHECK(r.rows() == minor_rank(m));
        CHECK(rref(r) == r);
        CHECK(Subspace::span(m) == Subspace::span(r));
    }
}

TEST_CASE("intersection and sum") {
    Matrix e = Matrix::identity(3);
    Subspace a = Subspace::span(select_rows(e, {0, 1}));
    Subspace b = Subspace::span(select_rows(e, {1, 2}));
    CHECK(intersect(a, b) == Subspace::span(select_rows(e, {1})));
    CHECK(intersect(a, a) == a);
    CHECK(sum(a, b).is_full());
    CHECK_THROWS_AS(intersect(a, Subspace::full(4)), Error);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 5 + static_cast<std::size_t>(trial % 2);
        std::size_t ra = 1 + rng() % 4, rb = 1 + rng() % 4;
        Subspace x = Subspace::span(random_matrix(rng, ra, n, true, 1));
        Subspace y = Subspace::span(random_matrix(rng, rb, n, true, 1));
        Subspace z = Subspace::span(random_matrix(rng, 2, n, true, 1));
        CHECK(x.dim() + y.dim() == intersect(x, y).dim() + sum(x, y).dim());
        CHECK(is_subspace(x, sum(x, y)));
        CHECK(is_subspace(intersect(x, y), x));
        // modular law: if X <= Z then X + (Y cap Z) = (X + Y) cap Z
        Subspace xz = intersect(x, z);
        CHECK(sum(xz, intersect(y, z)) == intersect(sum(xz, y), z));
    }
}

TEST_CASE("kernel, image, conjugation and apply") {
    CHECK(kernel(Matrix::zero(3, 3)).is_full());
    Matrix j = Matrix::unit(3, 0, 1) + Matrix::unit(3, 1, 2);
    Matrix e = Matrix::identity(3);
    CHECK(image(j) == Subspace::span(select_rows(e, {0, 1})));
    CHECK(kernel(j) == Subspace::span(select_rows(e, {0})));
    CHECK(apply(j, Subspace::full(3)) == image(j));

    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Subspace a = Subspace::span(random_matrix(rng, 2, 4, true));
        CHECK(conj(conj(a)) == a);
        Matrix m = random_matrix(rng, 4, 4, true);
        CHECK(conj(conj(m)) == m);
        Subspace k = kernel(m);
        for (std::size_t i = 0; i < k.dim(); ++i) CHECK(is_zero(m * k.vector(i)));
        CHECK(k.dim() + image(m).dim() == 4);
        Subspace ma = apply(m, a);
        for (std::size_t i = 0; i < a.dim(); ++i) CHECK(ma.contains(m * a.vector(i)));
        CHECK(is_subspace(a, preimage(m, ma)));
    }
}

TEST_CASE("nilpotent exponential") {
    CHECK(nilpotent_exp(Matrix::zero(3, 3), Gq(5)) == Matrix::identity(3));
    Matrix e12 = Matrix::unit(2, 0, 1);
    Matrix expect(2, 2);
    expect(0, 0) = 1;
    expect(0, 1) = Gq::i();
    expect(1, 1) = 1;
    CHECK(nilpotent_exp(e12, Gq::i()) == expect);
    CHECK_THROWS_AS(nilpotent_exp(Matrix::identity(2), Gq(1)), Error);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix n = random_nilpotent(rng, 4);
        REQUIRE(is_nilpotent(n));
        Gq z1(mpq_class(static_cast<long>(rng() % 7) - 3, 2), 1), z2(1, mpq_class(-1, 3));
        CHECK(nilpotent_exp(n, z1) * nilpotent_exp(n, -z1) == Matrix::identity(4));
        CHECK(nilpotent_exp(n, z1) * nilpotent_exp(n, z2) == nilpotent_exp(n, z1 + z2));
    }
}

TEST_CASE("hermitian positivity by leading minors") {
    CHECK(hermitian_pd(Matrix::identity(4)));
    Matrix h(2, 2);
    h(0, 0) = 1;
    h(0, 1) = Gq::i();
    h(1, 0) = -Gq::i();
    CHECK_FALSE(hermitian_pd(h));
    CHECK(hermitian_pd_failing_minor(h) == 2);
    CHECK_THROWS_AS(hermitian_pd(Matrix::from_ints({{1, 2}, {0, 1}})), Error);

    std::mt19937 rng(9);
    // fixed grid of test vectors for the necessary-direction check
    std::vector<Gq> grid{Gq(1), Gq(-1), Gq::i(), Gq(1, 1), Gq(mpq_class(1, 2), -1), Gq(0)};
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
        Matrix m = random_matrix(rng, n, n, true);
        bool full_rank = !det(m).is_zero();
        Matrix g = m * adjoint(m);
        if (full_rank) CHECK(hermitian_pd(g));
        Matrix s = random_matrix(rng, n, n, true);
        Matrix herm = s + adjoint(s);
        if (hermitian_pd(herm)) {
            for (int v = 0; v < 40; ++v) {
                Vec x(n);
                bool nonzero = false;
                for (std::size_t i = 0; i < n; ++i) {
                    x[i] = grid[rng() % grid.size()];
                    nonzero = nonzero || !x[i].is_zero();
                }
                if (!nonzero) continue;
                Gq val = bilinear(conj(x), herm, x);
                CHECK(val.is_real());
                CHECK(val.re() > 0);
            }
        }
    }
}
