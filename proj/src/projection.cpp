#include "ihfan/projection.hpp"
#include "ihfan/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace ihfan {

VecQ ProjectionData::project(const VecQ& x) const {
    auto c = solve(frame, x);
    assert(c);
    return c->tail(c->size() - 1);
}

Rational ProjectionData::height(const VecQ& x) const {
    auto c = solve(frame, x);
    assert(c);
    return (*c)(0);
}

ProjectionData projection_fan(const Fan& f, int sigma) {
    const Cone& s = f.cone(sigma);
    if (s.dim < 1) throw ZeroCone("projection fan of the zero cone");
    ProjectionData p;
    p.sigma = sigma;

    VecQ r = VecQ::Zero(f.ambient_dim());
    for (int rid : s.ray_ids) r += f.ray(rid);
    p.interior_ray = r;

    // complement W: the span-basis rows minus the pivot row of r
    auto rc = solve(s.span_basis.transpose(), r);
    assert(rc);
    int pivot = -1;
    for (Eigen::Index i = 0; i < rc->size(); ++i)
        if ((*rc)(i) != 0) { pivot = static_cast<int>(i); break; }
    assert(pivot >= 0);

    p.frame = MatQ(f.ambient_dim(), s.dim);
    p.frame.col(0) = r;
    int col = 1;
    for (int i = 0; i < s.dim; ++i) {
        if (i == pivot) continue;
        p.frame.col(col++) = s.span_basis.row(i).transpose();
    }

    if (s.dim == 1) {
        // a ray projects to the zero fan in the zero-dimensional quotient
        p.lambda = build_fan(0, {}, {});
        p.lambda.set_name("projection");
        p.cone_map[f.zero_cone_id()] = p.lambda.zero_cone_id();
        p.psi_on_facet[f.zero_cone_id()] = VecQ(0);
        return p;
    }

    // projected rays
    std::vector<VecQ> lam_rays;
    for (int rid : s.ray_ids) {
        VecQ img = p.project(f.ray(rid));
        if (img.isZero()) throw Error("projection collapsed a ray (interior point on a ray)");
        p.ray_map[rid] = static_cast<int>(lam_rays.size());
        lam_rays.push_back(primitivize(img));
    }

    // maximal cones: images of the facets of sigma
    std::vector<std::vector<int>> lam_max;
    for (int g : f.facets_of(sigma)) {
        std::vector<int> cone;
        for (int rid : f.cone(g).ray_ids) cone.push_back(p.ray_map.at(rid));
        std::sort(cone.begin(), cone.end());
        lam_max.push_back(std::move(cone));
    }
    p.lambda = build_fan(s.dim - 1, lam_rays, lam_max, /*check_pairwise=*/true);
    p.lambda.set_name("projection");
    if (!is_complete(p.lambda)) throw Error("projection fan is not complete (internal)");

    // face map, and the combinatorial isomorphism audit with boundary(sigma)
    int mapped = 0;
    for (int fid : s.face_ids) {
        const Cone& tau = f.cone(fid);
        std::vector<int> img;
        for (int rid : tau.ray_ids) img.push_back(p.ray_map.at(rid));
        std::sort(img.begin(), img.end());
        int lid = p.lambda.cone_by_rays(img);
        if (lid < 0) throw Error("face image missing from projection fan (internal)");
        if (p.lambda.cone(lid).dim != tau.dim)
            throw Error("projection is not dimension-preserving (internal)");
        p.cone_map[fid] = lid;
        ++mapped;
    }
    if (mapped != static_cast<int>(p.lambda.cones().size()))
        throw Error("projection fan has cones not coming from faces (internal)");

    // psi on each maximal cone of lambda: lift into span(facet), read off T
    for (int g : f.facets_of(sigma)) {
        const Cone& gc = f.cone(g);
        if (gc.dim == 0) { p.psi_on_facet[g] = VecQ(0); continue; }
        MatQ ypart(s.dim - 1, gc.dim);
        MatQ tpart(1, gc.dim);
        for (int i = 0; i < gc.dim; ++i) {
            VecQ b = gc.span_basis.row(i).transpose();
            auto c = solve(p.frame, b);
            assert(c);
            tpart(0, i) = (*c)(0);
            ypart.col(i) = c->tail(s.dim - 1);
        }
        // lambda: psi(y) = tpart * ypart^{-1} y  (ypart invertible: pi|g injective)
        auto sol = solve_many(ypart.transpose(), tpart.transpose());
        assert(sol);
        p.psi_on_facet[g] = sol->col(0);
    }
    return p;
}

} // namespace ihfan
