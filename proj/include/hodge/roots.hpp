#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hodge/lmhs.hpp"

namespace hodge {

using IVec = std::vector<int>;
using QVec = std::vector<mpq_class>;
using IMatrix = std::vector<std::vector<int>>;

/**
 * @brief Root system in simple-root coordinates (Bourbaki numbering).
 *
 * cartan[i][j] = <α_i, α_j^∨>. Length conventions: B_r has α_r short,
 * C_r has α_r long, G2 has α_1 short, F4 has α_1, α_2 long.
 */
struct RootSystem {
    char type = 'A';
    int rank = 0;
    IMatrix cartan;
    std::vector<int> len2;              ///< squared lengths of simple roots
    std::vector<IVec> positive;         ///< sorted by height, then lexicographically
    std::vector<IVec> roots;            ///< all roots, sorted lexicographically
    std::vector<QVec> fundamental_weights;

    std::string name() const { return std::string(1, type) + std::to_string(rank); }
    std::size_t dim() const { return roots.size() + static_cast<std::size_t>(rank); }
    /** @brief Symmetrised inner product of vectors in simple-root coordinates. */
    mpq_class inner(const QVec& a, const QVec& b) const;
    /** @brief <a, b^∨> = 2(a,b)/(b,b). */
    mpq_class pair(const QVec& a, const QVec& b) const;
    bool is_long(const IVec& root) const;
    IVec highest_root() const;
    bool is_root(const IVec& v) const;
};

QVec to_q(const IVec& v);

/** @throws Error "UnsupportedType". */
RootSystem build_root_system(char type, int rank);

/** @brief Grading element recorded by its values α_i(L) on the simple roots. */
struct GradingElement {
    QVec values;

    mpq_class eval(const IVec& root) const;
    mpq_class eval(const QVec& weight) const;
    GradingElement scaled(const mpq_class& s) const;
};

GradingElement grading_from_sigma(const RootSystem& rs, const std::set<int>& sigma);
/** @throws Error "NegativeGrading" if some α_i(L) < 0. */
std::set<int> sigma_from_grading(const RootSystem& rs, const GradingElement& l);
/** @brief Y = α^∨ as a grading element: values <α_i, α^∨>. */
GradingElement coroot_grading(const RootSystem& rs, const IVec& root);

/** @brief ℓ ↦ dim g_ℓ. @throws Error "NonIntegralGrading". */
std::map<int, int> l_decomposition(const RootSystem& rs, const GradingElement& l);

struct Compactness {
    std::vector<IVec> compact;
    std::vector<IVec> noncompact;
};
Compactness compactness(const RootSystem& rs, const GradingElement& l);

/** @brief Root β goes to (β(Y) - β(L), β(L)); the Cartan adds rank at (0,0). */
DimTable adjoint_bigrading(const RootSystem& rs, const GradingElement& l, const GradingElement& y);

using WeightMultiset = std::vector<std::pair<QVec, int>>;

/**
 * @brief Weight λ goes to (λ(Y) - λ(L) + n/2, λ(L) + n/2).
 * @throws Error "HalfIntegralityViolation".
 */
DimTable rep_bigrading(const WeightMultiset& w, const GradingElement& l, const GradingElement& y, int n);

/** @brief Weights of the standard representation of a classical system (A, B, C, D). */
WeightMultiset standard_weights(const RootSystem& rs);
/** @brief Short roots with zero weight of multiplicity `zeros` (G2: 7-dim with 1, F4: 26-dim with 2). */
WeightMultiset short_root_weights(const RootSystem& rs, int zeros);

/**
 * @brief (α_1(Y), …, α_r(Y)) after descent into the dominant chamber.
 *
 * Descent applies the simple reflection with the smallest index j such
 * that α_j(Y) < 0 until no such index remains.
 * @throws Error "NotNormalizable" (non-integral values), "EntryOutOfRange".
 */
IVec characteristic_vector(const RootSystem& rs, const GradingElement& y);

/** @brief Σ = {i : α_i(Y) = 0} and evenness of the characteristic vector. */
std::pair<std::set<int>, bool> jm_parabolic(const RootSystem& rs, const GradingElement& y);

/**
 * @brief Characteristic vector c ∈ {0,1,2}^r whose weight values λ(c)
 * reproduce the given eigenvalue multiset of Y on a representation.
 * @throws Error "NoCharacteristicVector" when no or several c match.
 */
IVec characteristic_vector_from_eigenvalues(const RootSystem& rs, const WeightMultiset& w,
                                            std::vector<int> eigenvalues);

/** @brief Eigenvalues of the neutral element of N on V, read from its Jordan type. */
std::vector<int> neutral_eigenvalues(const Matrix& n);

/**
 * @brief Conjugation σ and Cartan involution θ on root coordinates.
 *
 * Matrices act on column vectors of simple-root coordinates. Noncompact
 * imaginary roots are listed explicitly; when absent they are the
 * imaginary roots with odd β(L).
 */
struct InvolutionDatum {
    IMatrix sigma;
    IMatrix theta;
    std::optional<std::set<IVec>> noncompact_imaginary;
};

IVec act(const IMatrix& m, const IVec& v);
IMatrix identity_imatrix(int r);
IMatrix negate(const IMatrix& m);
/** @brief Matrix of the reflection β ↦ β - <β, α^∨> α in the root α. */
IMatrix reflection_matrix(const RootSystem& rs, const IVec& alpha);

/** @throws Error "InconsistentInvolutions". */
void check_involutions(const RootSystem& rs, const InvolutionDatum& inv);

struct OrbitDims {
    int dim_R_orbit = 0;
    int dim_KR_orbit = 0;
    int dim_C_dual = 0;
    int count_orbit = 0;   ///< |Δ(O)|
    int count_pp = 0;      ///< |Δ(≥0,≥0)|
    int count_pm = 0;      ///< |Δ(+,-)|
    int count_mp = 0;      ///< |Δ(-,+)|
};

/**
 * @brief Root counts for the real orbit of the flag determined by L.
 *
 * Δ(a,b) sorts roots by the signs of (β(L), (σβ)(L)).
 * dim_R O = |Δ| - |Δ(≥0,≥0)|, dim_C Ď = #{β : β(L) > 0},
 * dim K_R·F = dim k - dim(k ∩ p ∩ conj p) with k the θ-fixed part.
 */
OrbitDims orbit_dims(const RootSystem& rs, const GradingElement& l, const InvolutionDatum& inv);

/** @brief Every β ∈ Δ(-,+) is imaginary (θβ = β) and compact. */
bool closed_orbit_criterion(const RootSystem& rs, const GradingElement& l, const InvolutionDatum& inv);

}  // namespace hodge
