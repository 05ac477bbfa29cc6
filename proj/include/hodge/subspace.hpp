#pragma once

#include <cstddef>
#include <vector>

#include "hodge/matrix.hpp"

namespace hodge {

/**
 * @brief Subspace of C^n defined over Q[i], stored by its RREF basis.
 *
 * The reduced row-echelon basis is the canonical form, so two subspaces
 * are equal exactly when their stored bases are equal.
 */
class Subspace {
public:
    Subspace() = default;
    /** @brief Zero subspace of C^n. */
    explicit Subspace(std::size_t ambient) : n_(ambient), basis_(0, ambient) {}

    /** @brief Span of the rows of m. */
    static Subspace span(const Matrix& rows);
    static Subspace span(const std::vector<Vec>& rows, std::size_t ambient);
    static Subspace full(std::size_t ambient);
    static Subspace zero(std::size_t ambient) { return Subspace(ambient); }

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == n_; }
    const Matrix& basis() const { return basis_; }
    Vec vector(std::size_t i) const { return basis_.row(i); }

    bool contains(const Vec& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t n_ = 0;
    Matrix basis_;
};

/** @throws Error "AmbientMismatch". */
Subspace intersect(const Subspace& a, const Subspace& b);
/** @throws Error "AmbientMismatch". */
Subspace sum(const Subspace& a, const Subspace& b);
Subspace sum(const std::vector<Subspace>& parts, std::size_t ambient);
/** @brief Null space {x : Mx = 0}. */
Subspace kernel(const Matrix& m);
/** @brief Column space of m. */
Subspace image(const Matrix& m);
Subspace conj(const Subspace& a);
/** @brief Image M(A). @throws Error "AmbientMismatch". */
Subspace apply(const Matrix& m, const Subspace& a);
/** @brief Preimage {x : Mx in A}. */
Subspace preimage(const Matrix& m, const Subspace& a);
bool is_subspace(const Subspace& a, const Subspace& b);
/** @brief Annihilator {y : sum_i x_i y_i = 0 for x in A} (bilinear, no conjugation). */
Subspace annihilator(const Subspace& a);

/**
 * @brief Canonical complement of U inside V (U must lie in V).
 *
 * Each basis row of V is reduced against the echelon basis of U (clearing
 * U's pivot columns) and the nonzero remainders are put in echelon form.
 * This is the "lowest-echelon lift" used for quotient representatives.
 */
Subspace complement_in(const Subspace& u, const Subspace& v);

/** @brief True when the parts are independent and span the whole space. */
bool is_direct_sum_decomposition(const std::vector<Subspace>& parts, std::size_t ambient);

}  // namespace hodge
