#ifndef IHFAN_DECOMPOSE_HPP
#define IHFAN_DECOMPOSE_HPP

#include "ihfan/sheaf_data.hpp"

#include <vector>

namespace ihfan {

struct DecompositionSummand {
    int tau = -1;         // cone id
    int shift = 0;        // even t-degree shift l in F[-l]
    int multiplicity = 0; // >= 1
};

struct DecompositionResult {
    std::vector<DecompositionSummand> summands;
    bool stalk_sums_match = false; // summand stalk polynomials reproduce F's
    PoincarePoly mismatch_at;      // first failing cone's polynomial, for reports
};

/**
 * Decomposition of a flabby sheaf with free stalks into shifted simple
 * sheaves: processing cones by increasing dimension, the multiplicity of the
 * simple sheaf seeded at tau with shift l is the dimension of the degree-l
 * kernel of the stalk residue map into the boundary-section residues.  The
 * result is verified by summing the summands' stalk polynomials at every
 * cone.  Throws NotFlabby when some stalk fails to surject onto its boundary
 * sections.
 */
DecompositionResult decompose_semisimple(const SheafData& F, int degree_bound);

/// Stalk -> boundary-section surjectivity in every degree <= D, at each cone.
bool is_flabby(const SheafData& F, int degree_bound);

} // namespace ihfan

#endif
