#ifndef IHFAN_REFINEMENT_HPP
#define IHFAN_REFINEMENT_HPP

#include "ihfan/fan.hpp"

#include <vector>

namespace ihfan {

/**
 * Simplicial refinement by the pulling triangulation: every non-simplicial
 * cone is coned from its lowest-index ray over the recursively triangulated
 * facets not containing that ray.  No new rays are introduced, and the
 * refinement restricted to any face is the pulling triangulation of that
 * face, which the cellwise coning extension operator relies on.
 */
struct Refinement {
    const Fan* base = nullptr;
    Fan refined;                                  // simplicial
    std::vector<std::vector<std::vector<int>>> cells; // per base cone id: maximal cells (sorted raysets)
    std::vector<int> carrier;                     // per refined cone id: smallest containing base cone

    /// Maximal cells of the triangulation of a base cone, as refined-fan ids.
    std::vector<int> pieces_of(int base_cone) const;
    /// Lowest-index ray of a nonzero base cone (the pulled apex).
    int pulled_ray(int base_cone) const;
    bool is_identity() const;
};

Refinement simplicial_refinement(const Fan& f);

} // namespace ihfan

#endif
