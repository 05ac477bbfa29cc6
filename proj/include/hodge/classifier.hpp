#pragma once

#include <string>
#include <vector>

#include "hodge/lmhs.hpp"
#include "hodge/roots.hpp"

namespace hodge {

/** @brief A minimal degeneration shape for a period domain. */
struct MinimalType {
    enum class Kind { I, II };
    Kind kind = Kind::I;
    int p_o = 0;  ///< kind I only
    int q_o = 0;  ///< kind I only
    DimTable i_table;  ///< nonzero i^{p,q}

    std::string label() const;
};

/**
 * @brief Raw i-table of a candidate minimal type (entries may be negative).
 *
 * Kind I moves one class out of V^{p_o,q_o} and V^{p_o+1,q_o-1} into the
 * string I^{p_o+1,q_o} → I^{p_o,q_o-1}, together with its conjugate string
 * (which coincides with it when q_o - p_o = 1). Kind II (n = 2m) moves one
 * class each from V^{m∓1,m±1} into the string I^{m+1,m+1} → I^{m,m} → I^{m-1,m-1}.
 */
DimTable minimal_i_table(const HodgeNumbers& h, MinimalType::Kind kind, int p_o = 0);

/**
 * @brief All minimal types: kind I for p_o < q_o whenever the i-table is
 * non-negative; kind II when n = 2m, h^{m,m} is odd and h^{m-1,m+1} ≥ 1.
 */
std::vector<MinimalType> minimal_types(const HodgeNumbers& h);

/**
 * @brief Explicit nilpotent orbit realising a minimal type: a string block
 * (2-step for kind I, 3-step for kind II) ⊕ model PHS with the residual numbers.
 * @throws Error "InfeasibleType".
 */
LmhsDatum minimal_witness(const MinimalType& t, const HodgeNumbers& h);

/**
 * @brief sl2-string block built on a pure PHS U of weight w.
 *
 * V = U ⊕ NU ⊕ … ⊕ N^{ℓ-1}U of weight w + ℓ - 1, with
 * Q(N^a x, N^b y) = (-1)^a δ_{a+b,ℓ-1} Q_U(x, y) and N^j U^{r,s} ⊂ I^{r+ℓ-1-j, s+ℓ-1-j}.
 */
LmhsDatum string_block(const HodgeDatum& u, int length);

/**
 * @brief Atomic Hodge–Tate block (V_{k,d}, Q, N, F) of weight n.
 *
 * Basis e^s_a (k ≤ s ≤ n-k, 1 ≤ a ≤ d) ordered by a then s, N e^s_a = e^{s-1}_a,
 * (-1)^{n-k-s} Q(e^s_a, e^t_b) = δ_{ab} δ_{s+t,n}, F^p = span{e^s_a : s ≥ p}.
 */
LmhsDatum atomic_block(int n, int k, int d);

/** @brief h^{n,0} ≤ h^{n-1,1} ≤ … ≤ h^{n-m,m}. */
bool ht_gate(const HodgeNumbers& h);

struct HtPlan {
    int n = 0;
    std::vector<int> d;  ///< d_0, …, d_m
};

/** @throws Error "GateFailed". */
HtPlan ht_plan(const HodgeNumbers& h);

/** @brief ⊕_k atomic_block(n, k, d_k). @throws Error "GateFailed". */
LmhsDatum ht_construct(const HodgeNumbers& h);

/**
 * @brief Necessary conditions for an adjoint bigrading to come from a
 * closed-orbit degeneration. Clauses "cp_orb.clause1.offdiag",
 * "cp_orb.clause2.odd", "cp_orb.clause3.width", "cp_orb.clause4.mod4".
 * N-strings are read off the dimensions (sl2 theory, center 0).
 */
Report cp_orb_check(const DimTable& ig);

struct PeriodClosedResult {
    std::string verdict;  ///< "hodge-tate", "consistent-with-closed-orbit" or "violation"
    Report report;
};

/**
 * @brief Closed-orbit necessary conditions for a period-domain LMHS of weight n.
 *
 * Clauses "period.clauseA.ht_prim", "period.clauseB.mod4",
 * "period.clauseC.middle", "period.vshape"; odd weight and not Hodge–Tate
 * yields the single clause "period.OddWeightNonHT".
 */
PeriodClosedResult period_closed_check(const DimTable& i, int n);

enum class PrincipalFamily { Sp, SoOdd, SoEvenMm, SoEvenM2m };

/** @brief Parses "sp", "so_odd", "so_even_mm", "so_even_m2m". */
PrincipalFamily parse_principal_family(const std::string& name);
std::string to_string(PrincipalFamily f);

/**
 * @brief Principal nilpotent LMHS on the standard representation.
 *
 * Basis N^a v (and w first for the so_even families); Q(N^a v, N^b v) = (-1)^a δ
 * at a + b = top, so Q itself is the polarization; F^p = span{N^a v : a ≤ top - p}
 * (plus w for p ≤ m - 1).
 * @throws Error "ParityViolation".
 */
LmhsDatum principal_lmhs(PrincipalFamily f, int size);

/** @brief C_n, B_m or D_m matching the family. */
RootSystem principal_root_system(PrincipalFamily f, int size);

/** @brief Characteristic vector of the neutral element of N on the standard representation. */
IVec principal_characteristic_vector(PrincipalFamily f, int size, const LmhsDatum& l);

/** @brief Root-vector normal form of a codimension-one boundary nilpotent. */
struct NormalForm {
    std::string family;  ///< "rtN1", "rtN2" or "rtN3"
    std::string label;
    Matrix n;
};

/**
 * @brief Polarization in the normal-form basis: [[0,I],[-I,0]] for odd weight,
 * [[0,I],[I,0]] (plus Q(e_d,e_d) = 1 when d is odd) for even weight.
 */
Matrix normal_form_polarization(std::size_t d, int n);

/** @brief All root-vector normal forms for dim V = d and weight parity of n. */
std::vector<NormalForm> normal_forms(std::size_t d, int n);

/** @brief n = 2 instance with h = (2,1,2): a 3-string ⊕ pure (1,0,1). Not Hodge–Tate. */
LmhsDatum closed_orbit_instance_n2();

/** @brief Weight-4 instance with a 5-string (k = 4) ⊕ pure (0,1,0,1,0). */
LmhsDatum synthetic_k4_instance();

/**
 * @brief Non-Hodge–Tate closed-orbit candidate for even n = 2m.
 *
 * Writes h as diagonal N-strings of primitive level k ≡ 2 mod 4 plus
 * c >= 1 pure classes in each of V^{m+1,m-1}, V^{m-1,m+1}; the middle
 * row carries no other primitive classes. Returns nullopt when n is odd or
 * no such decomposition exists.
 */
std::optional<LmhsDatum> closed_orbit_construct(const HodgeNumbers& h);

/** @brief All symmetric h of weight n with entries in [0, max_entry], total in [1, max_dim]. */
std::vector<HodgeNumbers> enumerate_hodge_numbers(int n, int max_entry, int max_dim);

}  // namespace hodge
