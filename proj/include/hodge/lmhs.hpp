#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hodge/hodge.hpp"

namespace hodge {

/**
 * @brief Increasing filtration W_lo ⊆ … ⊆ W_hi of C^ambient.
 *
 * W_k is zero below lo and the whole space above the last stored level.
 */
struct WeightFiltration {
    std::size_t ambient = 0;
    int center = 0;
    int lo = 0;
    std::vector<Subspace> steps;

    Subspace at(int k) const;
    int hi() const { return lo + static_cast<int>(steps.size()) - 1; }
    friend bool operator==(const WeightFiltration& a, const WeightFiltration& b);
};

/** @brief Hodge datum together with a nilpotent N and its weight filtration. */
struct LmhsDatum {
    HodgeDatum hodge;
    Matrix N;
    WeightFiltration W;

    int center() const { return W.center; }
};

/** @brief Node multiset (p, q) ↦ dim. */
using DimTable = std::map<std::pair<int, int>, int>;

/** @brief Nonzero bigraded pieces of an ambient space, sorted by (p, q). */
struct Bigrading {
    std::size_t ambient = 0;
    std::vector<Piece> nodes;

    Subspace at(int p, int q) const;
    DimTable dims() const;
};

/** @brief Which ε_k multiplies Q(·, N^k ·) on primitive pieces. */
enum class PolarizationSign {
    Positive,     ///< ε_k = +1 (library default)
    Alternating,  ///< ε_k = (-1)^{k(k-1)/2}
    Flipped       ///< ε_k = -1 (mutation testing)
};

/** @brief The sign ε_k used by Q_k. */
int epsilon(int k, PolarizationSign sign = PolarizationSign::Positive);

/**
 * @brief Monodromy weight filtration of N centered at `center`.
 *
 * W_{c+k} = Σ_{j ≥ 0} im N^j ∩ ker N^{j+k+1}, which is the inductive
 * kernel/image construction written in closed form.
 * @throws Error "NotNilpotent".
 */
WeightFiltration weight_filtration(const Matrix& n, int center);

/**
 * @brief Checks N W_k ⊆ W_{k-2} and that N^k : Gr_{c+k} → Gr_{c-k} is bijective.
 * @return empty string on success, otherwise a description of the failure.
 */
std::string check_weight_properties(const Matrix& n, const WeightFiltration& w);

/** @brief Builds an LMHS datum computing W from N (center defaults to the weight). */
LmhsDatum make_lmhs(HodgeDatum hodge, Matrix n, std::optional<int> center = std::nullopt);

/** @brief Block direct sum of two data of the same weight and center. */
LmhsDatum direct_sum(const LmhsDatum& a, const LmhsDatum& b);

/**
 * @brief Deligne splitting via the full formula
 * I^{p,q} = F^p ∩ W_{p+q} ∩ (conj F^q ∩ W_{p+q} + Σ_{j≥1} conj F^{q-j} ∩ W_{p+q-j-1}).
 * @throws Error "NotMhs" when the reconstruction laws fail.
 */
Bigrading deligne_splitting_full(const LmhsDatum& l);

/**
 * @brief Deligne splitting; tries the R-split candidate F^p ∩ conj F^q ∩ W_{p+q}
 * first and falls back to the full formula when it is not a valid R-split splitting.
 * @throws Error "NotMhs".
 */
Bigrading deligne_splitting(const LmhsDatum& l);

/** @brief W_k = ⊕_{p+q≤k} I^{p,q} and F^p = ⊕_{r≥p} I^{r,•}; empty string when both hold. */
std::string check_reconstruction(const LmhsDatum& l, const Bigrading& b);

bool is_r_split(const Bigrading& b);
bool is_hodge_tate(const Bigrading& b);
bool is_hodge_tate(const DimTable& t);

/**
 * @brief Lifted primitive subspaces for k ≥ 0.
 *
 * The lift of Gr_{c+k,prim} is the lowest-echelon complement of W_{c+k-1}
 * inside {v ∈ W_{c+k} : N^{k+1} v ∈ W_{c-k-3}}.
 */
std::vector<std::pair<int, Subspace>> primitives(const LmhsDatum& l);

/** @brief P^{p,q} = I^{p,q} ∩ ker N^{k+1} with p + q = c + k, k ≥ 0 (nonzero only). */
std::vector<Piece> primitive_pieces(const LmhsDatum& l, const Bigrading& b);

/** @brief Gram matrix of Q_k(v, w) = ε_k Q(v, N^k w) on the lifted basis of Gr_{c+k}. */
Matrix qk_form(const LmhsDatum& l, int k, PolarizationSign sign = PolarizationSign::Positive);

struct ValidateOptions {
    PolarizationSign sign = PolarizationSign::Positive;
};

/**
 * @brief Nilpotent-orbit validator.
 *
 * Clauses: "structure", "infinitesimal", "weight_filtration", "graded_hodge",
 * "n_type", "polarization".
 */
Report validate_lmhs(const LmhsDatum& l, const ValidateOptions& opts = {});

/** @brief validate_phs on exp(i y N) F for each y; one clause per sample. */
Report disc_sample(const LmhsDatum& l, const std::vector<mpq_class>& ys);

/** @brief Adjoint limiting mixed Hodge structure on g ⊂ End(V, Q). */
struct AdjointLmhs {
    std::vector<Matrix> g_basis;
    Bigrading I_g;              ///< in coordinates with respect to g_basis
    HodgeFiltration F_g;
    WeightFiltration W_g;       ///< centered at 0
    Matrix killing_proxy;       ///< tr(ξ_k ξ_l)
    Vec n_coords;               ///< coordinates of N

    // Bigraded frame of V used to read off bidegrees.
    Matrix frame;                          ///< columns are bigraded basis vectors of V
    std::vector<std::pair<int, int>> labels;
    std::vector<Matrix> framed_basis;      ///< frame^{-1} ξ frame
    Coordinates framed_coords;

    /** @brief Matrix in V of the element with the given coordinates. */
    Matrix element(const Vec& coords) const;
    /** @brief Coordinates of a matrix acting on V. @throws Error "NotInSpan". */
    Vec coords_of(const Matrix& x) const;
};

/** @brief Basis of End(V, Q) = {ξ : ξ^T Q + Q ξ = 0} (canonical echelon basis). */
std::vector<Matrix> endomorphism_algebra(const Matrix& q);

/**
 * @brief Induced LMHS on g (full End(V,Q) unless a subalgebra basis is supplied).
 * @throws Error "NonRSplit", "NotGraded" (g not compatible with the splitting).
 */
AdjointLmhs adjoint_lmhs(const LmhsDatum& l, const std::vector<Matrix>& g_basis = {});

/** @brief F^p_∞ = ⊕_{q ≤ n-p} I^{•,q}. @throws Error "NonRSplit". */
HodgeFiltration reduced_limit(const Bigrading& b, int n);

/** @brief Clauses "hr1_isotropy" and "monodromy_fixed" for F_∞. */
Report check_reduced_limit(const LmhsDatum& l, const HodgeFiltration& finf);

/** @brief The Hodge–Tate subalgebra s = ⊕_p I^{p,p}_g with its induced data. */
struct DiagonalLevi {
    Subspace s;                     ///< in g-coordinates
    std::vector<Matrix> basis;      ///< matrices acting on V
    HodgeFiltration F_s;
    WeightFiltration W_s;
    Bigrading I_s;
    bool contains_n = false;
    bool hodge_tate = false;
};

/** @throws Error "BracketEscape" if [s, s] ⊄ s, "NotConjStable" if conj(s) ≠ s. */
DiagonalLevi diagonal_levi(const AdjointLmhs& a);

/**
 * @brief sl2 primitive counts from node dimensions.
 *
 * For p + q ≥ center, prim(p,q) = i^{p,q} - i^{p+1,q+1}; each primitive
 * class heads a string of length p + q - center + 1.
 */
DimTable primitive_dims(const DimTable& t, int center);

/** @brief Node-dimension table of a bigrading restricted to nonzero nodes. */
DimTable nonzero(const DimTable& t);

}  // namespace hodge
