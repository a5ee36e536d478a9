#include "ihfan/recursion.hpp"
#include "ihfan/projection.hpp"

#include <cassert>

namespace ihfan {

const PoincarePoly& LocalPolyTable::local_poly(int cone_id) {
    if (have_.empty()) have_.assign(fan_->cones().size(), false);
    if (have_[static_cast<size_t>(cone_id)]) return cache_[static_cast<size_t>(cone_id)];

    PoincarePoly result;
    if (is_simplicial(*fan_, cone_id)) {
        result = PoincarePoly::one();
    } else {
        ProjectionData proj = projection_fan(*fan_, cone_id);
        // Lambda_sigma is complete, hence quasi-convex
        PoincarePoly p_lambda = global_poly(proj.lambda, /*relative=*/false);
        result = (one_minus_t2() * p_lambda).truncate_below(fan_->cone(cone_id).dim);
    }
    cache_[static_cast<size_t>(cone_id)] = result;
    have_[static_cast<size_t>(cone_id)] = true;
    return cache_[static_cast<size_t>(cone_id)];
}

PoincarePoly local_poly(const Fan& f, int cone_id) {
    LocalPolyTable t(f);
    return t.local_poly(cone_id);
}

bool quasi_convex_syntactic(const Fan& f) {
    if (is_complete(f)) return true;
    const auto& maxs = f.max_cone_ids();
    return maxs.size() == 1 && f.cone(maxs[0]).dim == f.ambient_dim();
}

PoincarePoly global_poly(const Fan& f, bool relative, bool assume_quasi_convex) {
    if (!assume_quasi_convex && !quasi_convex_syntactic(f))
        throw NotQuasiConvexHint(
            "fan is neither complete nor affine full-dimensional; pass an explicit "
            "quasi-convexity assertion (e.g. after an oracle verdict)");
    const int n = f.ambient_dim();
    // For complete fans the topological boundary is empty, so every cone
    // (including the zero cone) is interior; the boundary subfan object still
    // carries the zero cone by convention.
    const bool skip_boundary = !relative && !is_complete(f);
    Subfan boundary = skip_boundary ? boundary_subfan(f) : Subfan{};
    LocalPolyTable table(f);
    PoincarePoly sum;
    for (const auto& c : f.cones()) {
        if (skip_boundary && boundary.contains(c.id)) continue;
        sum = sum + t2_minus_1_pow(n - c.dim) * table.local_poly(c.id);
    }
    return sum;
}

DualityReport check_duality(const Fan& f, bool assume_quasi_convex) {
    DualityReport r;
    r.absolute = global_poly(f, false, assume_quasi_convex);
    r.relative = global_poly(f, true, assume_quasi_convex);
    r.reversed = r.absolute.duality_transform(f.ambient_dim());
    r.holds = (r.relative == r.reversed);
    return r;
}

DegreeBoundAudit degree_bound_audit(const Fan& f, bool assume_quasi_convex) {
    DegreeBoundAudit audit;
    const int n = f.ambient_dim();
    PoincarePoly rel = global_poly(f, true, assume_quasi_convex);
    PoincarePoly abs = global_poly(f, false, assume_quasi_convex);

    audit.relative_monic_2n = (rel.t_degree() == 2 * n) && (rel.coeff(n) == 1);
    audit.absolute_degree_ok = is_complete(f) ? (abs.t_degree() == 2 * n)
                                              : (abs.t_degree() < 2 * n);
    audit.local_degrees_ok = true;
    LocalPolyTable table(f);
    for (const auto& c : f.cones()) {
        if (c.dim == 0) continue;
        if (table.local_poly(c.id).t_degree() > 2 * c.dim - 2) audit.local_degrees_ok = false;
    }
    return audit;
}

} // namespace ihfan
