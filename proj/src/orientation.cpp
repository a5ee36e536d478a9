#include "ihfan/orientation.hpp"
#include "ihfan/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace ihfan {

Rational det(const MatQ& m) {
    assert(m.rows() == m.cols());
    MatQ a = m;
    const Eigen::Index n = a.rows();
    Rational d = 1;
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = c; i < n; ++i)
            if (a(i, c) != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != c) { a.row(piv).swap(a.row(c)); d = -d; }
        d *= a(c, c);
        for (Eigen::Index i = c + 1; i < n; ++i) {
            if (a(i, c) != 0) {
                // materialize: boost expression templates must not alias the
                // entries being overwritten during the lazy row update
                const Rational factor = a(i, c) / a(c, c);
                a.row(i) -= factor * a.row(c);
            }
        }
    }
    return d;
}

OrientationData::OrientationData(const Fan& f) : fan_(&f) {
    for (const auto& sigma : f.cones()) {
        if (sigma.dim == 0) continue;
        const int d = sigma.dim;
        for (int tau_id : f.facets_of(sigma.id)) {
            const Cone& tau = f.cone(tau_id);
            // w: lowest-index ray of sigma not in tau
            int w_ray = -1;
            for (int r : sigma.ray_ids) {
                if (!std::binary_search(tau.ray_ids.begin(), tau.ray_ids.end(), r)) {
                    w_ray = r;
                    break;
                }
            }
            assert(w_ray >= 0);
            // columns: [w, basis(tau)] in sigma-basis coordinates
            MatQ cols(f.ambient_dim(), d);
            cols.col(0) = f.ray(w_ray);
            for (int i = 0; i + 1 < d; ++i)
                cols.col(i + 1) = tau.span_basis.row(i).transpose();
            auto coords = solve_many(sigma.span_basis.transpose(), cols);
            assert(coords);
            Rational dt = det(*coords);
            assert(dt != 0);
            signs_[{sigma.id, tau_id}] = dt > 0 ? 1 : -1;
        }
    }
}

int OrientationData::sign(int sigma, int tau) const {
    auto it = signs_.find({sigma, tau});
    assert(it != signs_.end());
    return it->second;
}

OrientationData orientation_data(const Fan& f) { return OrientationData(f); }

} // namespace ihfan
