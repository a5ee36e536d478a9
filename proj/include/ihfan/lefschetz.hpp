#ifndef IHFAN_LEFSCHETZ_HPP
#define IHFAN_LEFSCHETZ_HPP

#include "ihfan/fan.hpp"
#include "ihfan/poincare.hpp"

#include <vector>

namespace ihfan {

struct LefschetzReport {
    bool vanishing_ok = false;  // V(sigma) confirmed before the rank check
    int m = 0;                  // dim sigma - 1
    PoincarePoly gbar;          // residue dimensions on the projection fan
    struct Level {
        int two_q = 0;
        long dim_from = 0, dim_to = 0, rank = 0;
        bool injective = false, surjective = false;
        bool needs_injective = false, needs_surjective = false;
    };
    std::vector<Level> levels;
    bool passed = false; // every required injectivity/surjectivity holds
};

/**
 * Combinatorial hard Lefschetz for a nonzero cone: multiplication by the
 * strictly convex piecewise linear height function on the projection fan
 * must be injective on the residues of the minimal extension sheaf for
 * 2q <= m - 1 and surjective for 2q >= m - 1, where m = dim sigma - 1.
 * When V(sigma) fails the report says so and skips the ranks.
 */
LefschetzReport hard_lefschetz_check(const Fan& f, int sigma, int degree_bound);

} // namespace ihfan

#endif
