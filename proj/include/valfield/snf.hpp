#pragma once

#include <cstdint>
#include <vector>

#include "valfield/matrix.hpp"

namespace valfield {

/**
 * Smith Normal Form over the valuation ring O_K:
 *
 *     q * M * p_inv == s,   s = diag(pi^a_1, ..., pi^a_r, 0)
 *
 * with a_1 <= ... <= a_r and q, p in GL(O_K). The exponents are unique;
 * the transition matrices are not, so only their defining properties
 * should ever be checked.
 */
struct SnfDecomposition {
    Matrix q;      ///< m x m, unimodular
    Matrix s;      ///< m x n, diagonal of uniformizer powers
    Matrix p;      ///< n x n, unimodular
    Matrix q_inv;
    Matrix p_inv;
    std::vector<std::int64_t> exponents;

    std::size_t rank() const { return exponents.size(); }
};

/// Pivots on an entry of minimal valuation (ties: lowest row, then lowest
/// column), so every elimination multiplier is integral.
SnfDecomposition smith_normal_form(const Matrix& m);

/// True iff all entries are integral and the determinant is a unit.
bool is_unimodular(const Matrix& m);

} // namespace valfield
