#ifndef IHFAN_ORIENTATION_HPP
#define IHFAN_ORIENTATION_HPP

#include "ihfan/fan.hpp"

#include <map>
#include <utility>

namespace ihfan {

/**
 * Fixed orientations for the cellular coboundary.  Each cone carries the
 * canonical (rref) basis of its span; the incidence sign of a facet pair
 * (tau < sigma) is the determinant sign of [w, basis(tau)] written in
 * basis(sigma), where w is the lowest-index ray of sigma outside tau.  For
 * full-dimensional cones the rref basis is the standard basis, so top-level
 * orientations are globally consistent and the augmented complex closes.
 */
class OrientationData {
public:
    explicit OrientationData(const Fan& f);

    /// Incidence sign for tau a facet of sigma, in {+1, -1}.
    int sign(int sigma, int tau) const;

private:
    const Fan* fan_;
    std::map<std::pair<int, int>, int> signs_;
};

OrientationData orientation_data(const Fan& f);

/// Exact determinant of a square rational matrix.
Rational det(const MatQ& m);

} // namespace ihfan

#endif
