#ifndef IHFAN_HULL_HPP
#define IHFAN_HULL_HPP

#include "ihfan/fan.hpp"

#include <vector>

namespace ihfan {

enum class PolytopeFanMode { face_fan, normal_fan };

/**
 * Exact desk-scale convex hull: facets are found among the affine hyperplanes
 * spanned by n-point subsets, and every input point must be a vertex (its
 * facet normals span the ambient space).  The face fan cones over the facets
 * after translating the centroid to the origin; the normal fan collects the
 * outer facet normals around each vertex.
 */
struct HullFacet {
    VecQ normal;      // outer normal
    Rational offset;  // normal . x == offset on the facet
    std::vector<int> vertex_ids;
};

std::vector<HullFacet> convex_hull_facets(const std::vector<VecQ>& points);

Fan polytope_to_fan(const std::vector<VecQ>& vertices, PolytopeFanMode mode);

} // namespace ihfan

#endif
