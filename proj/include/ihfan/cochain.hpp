#ifndef IHFAN_COCHAIN_HPP
#define IHFAN_COCHAIN_HPP

#include "ihfan/orientation.hpp"
#include "ihfan/poincare.hpp"
#include "ihfan/sheaf_data.hpp"

#include <vector>

namespace ihfan {

enum class CochainVariant { absolute, relative, augmented_relative };

/**
 * One t-degree slice of the cellular cochain complex: the module in
 * codimension k is the direct sum of the degree-2q stalk slices over the
 * cones of dimension n - k (omitting boundary cones in the relative
 * variants), with signed restriction coboundaries.  The augmented variant
 * prepends the global section module.
 */
struct CochainComplex {
    int q = 0;
    bool augmented = false;
    std::vector<long> dims;   // modules in order (augmentation first if present)
    std::vector<MatQ> deltas; // deltas[i]: module i -> module i + 1

    bool is_complex() const;             // consecutive composites vanish
    std::vector<long> cohomology() const; // dimension per position
    bool exact() const;
};

/// Boundary membership per cone: empty for complete fans, otherwise the face
/// closure of the walls lying in a single maximal cone.
std::vector<bool> boundary_mask(const Fan& f);

CochainComplex cochain_complex(const SheafData& F, CochainVariant v, int q,
                               const OrientationData& ori);

/// H~ of the augmented relative complex vanishes in every t-degree <= D.
bool augmented_exact_through(const SheafData& F, int D, const OrientationData& ori);

enum class QCVerdict { yes_syntactic, yes_oracle, no_oracle };

/// Quasi-convexity: syntactic when the fan is complete or affine
/// full-dimensional, otherwise decided by exactness of the augmented
/// relative complex through degree D.
QCVerdict quasi_convex(const SheafData& F, int D, const OrientationData& ori);

struct FreenessReport {
    bool absolute = false;
    bool relative = false;
    PoincarePoly abs_residues;
    PoincarePoly rel_residues;
    std::vector<long> abs_dims; // section dimensions per q
    std::vector<long> rel_dims;
    bool all() const { return absolute && relative; }
};

/// Hilbert-series freeness: the graded dimensions of the (absolute and
/// boundary-vanishing) section modules match residues / (1 - t^2)^n through
/// degree D.
FreenessReport freeness_hilbert_check(const SheafData& F, int D);

struct OracleDuality {
    bool holds = false;
    PoincarePoly absolute;
    PoincarePoly relative;
};

/// Residue dimensions of the relative section module against the duality
/// transform of the absolute ones.
OracleDuality oracle_duality(const SheafData& F, int D);

/// Residue dimensions of the global section module (the oracle's Poincare
/// polynomial of the fan), through t-degree D.
PoincarePoly oracle_global_poly(const SheafData& F, int D, bool relative);

} // namespace ihfan

#endif
