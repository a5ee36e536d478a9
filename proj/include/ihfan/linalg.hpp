#ifndef IHFAN_LINALG_HPP
#define IHFAN_LINALG_HPP

#include "ihfan/rational.hpp"

#include <optional>
#include <vector>

namespace ihfan {

/**
 * Exact rational linear algebra.  All routines are deterministic: pivots are
 * chosen as the first nonzero entry in column order, so repeated runs produce
 * bit-identical bases.
 */

struct Rref {
    MatQ mat;                    // reduced row echelon form
    std::vector<int> pivot_cols; // one per nonzero row
    int rank = 0;
};

Rref rref(const MatQ& m);

int rank(const MatQ& m);

/// Basis of the right kernel {x : m x = 0}, as columns.  Canonical: free
/// variables set to 1 one at a time, in column order.
MatQ kernel_basis(const MatQ& m);

/// Particular solution of a x = b with free variables set to zero.
/// Returns std::nullopt when the system is inconsistent.
std::optional<VecQ> solve(const MatQ& a, const VecQ& b);

/// Columnwise solve of a X = B; nullopt if any column is inconsistent.
std::optional<MatQ> solve_many(const MatQ& a, const MatQ& b);

/// True iff v lies in the column span of basis.
bool in_span(const MatQ& basis, const VecQ& v);

/// Indices of columns of `candidates` that extend the column space of `sub`
/// to that of [sub | candidates], chosen greedily in column order.
std::vector<int> complement_indices(const MatQ& sub, const MatQ& candidates);

/// Feasibility of {x >= 0 : a x = b}, by a phase-I simplex with Bland's rule.
bool nonneg_solution_exists(MatQ a, VecQ b);

/// Horizontal / vertical concatenation helpers.
MatQ hcat(const MatQ& a, const MatQ& b);
MatQ vcat(const MatQ& a, const MatQ& b);

} // namespace ihfan

#endif
