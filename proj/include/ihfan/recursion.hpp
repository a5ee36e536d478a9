#ifndef IHFAN_RECURSION_HPP
#define IHFAN_RECURSION_HPP

#include "ihfan/fan.hpp"
#include "ihfan/poincare.hpp"

#include <map>
#include <string>
#include <vector>

namespace ihfan {

/**
 * The fast combinatorial path.  Local polynomials follow the recursion
 *
 *   P_sigma = 1                                        (sigma simplicial)
 *   P_sigma = trunc_{< dim sigma}((1 - t^2) P_{Lambda_sigma})   (otherwise)
 *
 * where Lambda_sigma is the projection fan; global and relative polynomials
 * come from the local-to-global sum of (t^2-1)^{n - dim sigma} P_sigma over
 * the interior cones resp. all cones.  The recursion is the toric g-vector
 * recursion; outputs are the minimal-extension dimensions whenever the
 * vanishing condition holds, which the sheaf oracle checks independently.
 */
class LocalPolyTable {
public:
    explicit LocalPolyTable(const Fan& f) : fan_(&f), cache_(f.cones().size()) {}

    const PoincarePoly& local_poly(int cone_id);
    const Fan& fan() const { return *fan_; }

private:
    const Fan* fan_;
    std::vector<PoincarePoly> cache_;
    std::vector<bool> have_ = {};
};

PoincarePoly local_poly(const Fan& f, int cone_id);

/// Sufficient syntactic quasi-convexity: complete, or affine with one
/// full-dimensional maximal cone.
bool quasi_convex_syntactic(const Fan& f);

/// Local-to-global sum.  Refuses with NotQuasiConvexHint when neither
/// syntactic criterion holds unless assume_quasi_convex is set.
PoincarePoly global_poly(const Fan& f, bool relative, bool assume_quasi_convex = false);

struct DualityReport {
    bool holds = false;
    PoincarePoly absolute;
    PoincarePoly relative;
    PoincarePoly reversed; // t^{2n} P(1/t)
};

/// Numerical Poincare duality: P_(Delta, boundary) == t^{2n} P_Delta(1/t).
DualityReport check_duality(const Fan& f, bool assume_quasi_convex = false);

struct DegreeBoundAudit {
    bool relative_monic_2n = false;  // relative polynomial monic of degree 2n
    bool absolute_degree_ok = false; // deg = 2n iff complete
    bool local_degrees_ok = false;   // deg P_sigma <= 2 dim sigma - 2
    bool all() const { return relative_monic_2n && absolute_degree_ok && local_degrees_ok; }
};

DegreeBoundAudit degree_bound_audit(const Fan& f, bool assume_quasi_convex = false);

} // namespace ihfan

#endif
