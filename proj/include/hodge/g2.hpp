#pragma once

#include <vector>

#include "hodge/lmhs.hpp"

namespace hodge {

/**
 * @brief The 7-dimensional representation of g2 on the weight basis
 * w3, w2, w1, w0, w-1, w-2, w-3 (indices 0..6).
 *
 * The Chevalley generators were solved for once by tests/oracle/g2_oracle.py
 * and are hard-coded here. Q is the invariant symmetric form normalised so
 * that Q(w3, w-3) = 1.
 */
struct G2Realization {
    Matrix E1, E2, F1, F2;
    Matrix Q;
    std::vector<Matrix> basis;  ///< bracket closure of the generators (dim 14)
};

/** @brief Generators, invariant form and a basis of g2 ⊂ End(V). */
const G2Realization& g2_realization();

/**
 * @brief Closed-orbit degeneration: N = F1 + F2 (principal), F^p spanned by
 * the top 7 - p weight vectors. Hodge–Tate of weight 6.
 */
LmhsDatum g2_closed_lmhs();

/**
 * @brief Open-orbit point: the pure weight-6 structure exp(iN)F obtained from
 * the closed-orbit data, viewed as an LMHS with N = 0.
 */
LmhsDatum g2_open_lmhs();

}  // namespace hodge
