#pragma once

#include <cstddef>
#include <vector>

#include "hodge/matrix.hpp"
#include "hodge/report.hpp"
#include "hodge/subspace.hpp"

namespace hodge {

/**
 * @brief Decreasing filtration F^lo ⊇ F^{lo+1} ⊇ … of C^ambient.
 *
 * F^p is the whole space for p < lo and zero past the last stored step.
 * Hodge data read from JSON always have lo = 0; adjoint filtrations on Lie
 * algebras use negative indices.
 */
struct HodgeFiltration {
    std::size_t ambient = 0;
    int lo = 0;
    std::vector<Subspace> steps;

    /** @brief F^p for any integer p. */
    Subspace at(int p) const;
    /** @brief Largest index with a nonzero step (lo - 1 when all are zero). */
    int hi() const;
    /** @brief Checks F^p ⊇ F^{p+1} for all stored steps. */
    bool is_decreasing() const;
};

/** @brief (V, Q, F) with V = C^dim and weight n. */
struct HodgeDatum {
    std::size_t dim = 0;
    int weight = 0;
    Matrix Q;
    HodgeFiltration F;
};

/** @brief Subspace labelled by a bidegree. */
struct Piece {
    int p = 0;
    int q = 0;
    Subspace space;
};

/** @brief Hodge numbers, stored in the order h^{n,0}, h^{n-1,1}, …, h^{0,n}. */
struct HodgeNumbers {
    int n = 0;
    std::vector<int> h;

    /** @brief h^{p,n-p} (zero outside 0 ≤ p ≤ n). */
    int at(int p) const { return (p < 0 || p > n) ? 0 : h[static_cast<std::size_t>(n - p)]; }
    int total() const;
    bool symmetric() const;
    friend bool operator==(const HodgeNumbers& a, const HodgeNumbers& b) { return a.n == b.n && a.h == b.h; }
};

/** @brief Q(u, v) for all pairs of basis rows: A Q B^T. */
Matrix gram(const Matrix& a, const Matrix& q, const Matrix& b);

/** @brief Structural checks: shapes, Q real, nondegenerate, (-1)^n symmetric, F decreasing with F^0 = V. */
Report check_structure(const HodgeDatum& d);

/** @brief V^{p,q} = F^p ∩ conj F^q for p + q = n, p ascending (zero pieces included). */
std::vector<Piece> hodge_decomposition(const HodgeDatum& d);

/** @brief Q(F^p, F^{n-p+1}) = 0 and F^p ⊕ conj F^{n-p+1} = V for every p. */
bool check_hr1(const HodgeDatum& d);

/**
 * @brief i^{p-q} Q(u, conj v) is positive definite on every V^{p,q}.
 * @throws Error "Hr1Prerequisite" if HR1 fails.
 */
bool check_hr2(const HodgeDatum& d);

/** @brief Clauses "structure", "hr1", "hr2", "spans". */
Report validate_phs(const HodgeDatum& d);

/** @throws Error "InconsistentFiltration" when f^p disagrees with the h^{p,q}. */
HodgeNumbers hodge_numbers(const HodgeDatum& d);

/**
 * @brief Hodge numbers read from the filtration alone, h^{p,n-p} = dim F^p - dim F^{p+1}.
 *
 * Valid for any filtration, in particular for the limit filtration of an LMHS.
 */
HodgeNumbers filtration_hodge_numbers(const HodgeFiltration& f, int n);

/**
 * @brief Canonical polarized Hodge structure with the given Hodge numbers.
 *
 * Real coordinates come in pairs (e, f) for each u^{p,q} = e + i f with
 * p > q (so u^{q,p} = conj u^{p,q}), followed by single real vectors for
 * V^{m,m}. Q is block diagonal on these planes with signs fixed by HR2.
 * @throws Error "InadmissibleHodgeNumbers" when h is asymmetric or negative.
 */
HodgeDatum model_phs(const HodgeNumbers& h);

/** @brief Apply g to every step: (gF)^p = g(F^p). */
HodgeFiltration transform(const Matrix& g, const HodgeFiltration& f);

/** @brief Direct sum of filtrations (block coordinates, first then second). */
HodgeFiltration direct_sum(const HodgeFiltration& a, const HodgeFiltration& b);

/** @brief Embed subspace of C^a into C^{a+b} (offset 0) or C^{b+a} (offset b). */
Subspace embed(const Subspace& s, std::size_t total, std::size_t offset);

}  // namespace hodge
