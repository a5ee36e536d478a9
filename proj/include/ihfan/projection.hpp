#ifndef IHFAN_PROJECTION_HPP
#define IHFAN_PROJECTION_HPP

#include "ihfan/fan.hpp"

#include <map>

namespace ihfan {

/**
 * The projection fan of a nonzero cone: project the proper faces along the
 * line through the interior point r = sum of the primitive generators.  The
 * result is a complete fan in V_sigma / L, together with the data of the
 * projection and of the linear functional T with T(r) = 1 vanishing on the
 * chosen complement; T transports to the strictly convex piecewise linear
 * function used by the Lefschetz rank check.
 */
struct ProjectionData {
    int sigma = -1;      // source cone id
    VecQ interior_ray;   // r, ambient coordinates
    MatQ frame;          // (r | complement basis) as columns, n x dim(sigma)
    Fan lambda;          // complete fan in dimension dim(sigma) - 1

    std::map<int, int> ray_map;  // source ray id -> lambda ray index
    std::map<int, int> cone_map; // proper face id of sigma -> lambda cone id

    /// psi restricted to the image of facet g: a linear functional on the
    /// quotient coordinates, so that psi(pi(x)) = T(x) for x in span(g).
    std::map<int, VecQ> psi_on_facet;

    /// Quotient coordinates of a point of V_sigma.
    VecQ project(const VecQ& x) const;
    /// T(x) for x in V_sigma.
    Rational height(const VecQ& x) const;
};

ProjectionData projection_fan(const Fan& f, int sigma);

} // namespace ihfan

#endif
