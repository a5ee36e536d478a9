#include <catch2/catch_amalgamated.hpp>

#include "ihfan/orientation.hpp"
#include "ihfan/projection.hpp"
#include "ihfan/refinement.hpp"

#include <algorithm>
#include <set>

using namespace ihfan;

static VecQ v2(int a, int b) {
    VecQ v(2);
    v << a, b;
    return v;
}
static VecQ v3(int a, int b, int c) {
    VecQ v(3);
    v << a, b, c;
    return v;
}

static Fan cone_over_square() {
    return build_fan(3, {v3(1, 0, 1), v3(0, 1, 1), v3(-1, 0, 1), v3(0, -1, 1)}, {{0, 1, 2, 3}});
}

static Fan cube_face_fan() {
    std::vector<VecQ> rays;
    for (int x : {-1, 1})
        for (int y : {-1, 1})
            for (int z : {-1, 1}) rays.push_back(v3(x, y, z));
    std::vector<std::vector<int>> maxs;
    for (int axis = 0; axis < 3; ++axis) {
        for (int sign = 0; sign < 2; ++sign) {
            std::vector<int> cone;
            for (int i = 0; i < 8; ++i) {
                int coord = (axis == 0) ? i / 4 : (axis == 1) ? (i / 2) % 2 : i % 2;
                if (coord == sign) cone.push_back(i);
            }
            maxs.push_back(cone);
        }
    }
    return build_fan(3, rays, maxs);
}

TEST_CASE("simplicial fan refines to itself") {
    Fan f = build_fan(2, {v2(1, 0), v2(0, 1), v2(-1, 0), v2(0, -1)},
                      {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    Refinement r = simplicial_refinement(f);
    CHECK(r.is_identity());
    CHECK(r.refined.cones().size() == f.cones().size());
}

TEST_CASE("pulling triangulation of the cone over a square") {
    Fan f = cone_over_square();
    Refinement r = simplicial_refinement(f);
    int sigma = f.cone_by_rays({0, 1, 2, 3});
    auto cells = r.cells[static_cast<size_t>(sigma)];
    std::set<std::vector<int>> expect = {{0, 1, 2}, {0, 2, 3}};
    CHECK(std::set<std::vector<int>>(cells.begin(), cells.end()) == expect);
    CHECK(is_simplicial_fan(r.refined));
    // shared wall {0,2} present in the refined fan, carried by sigma
    int wall = r.refined.cone_by_rays({0, 2});
    REQUIRE(wall >= 0);
    CHECK(r.carrier[static_cast<size_t>(wall)] == sigma);
    // rays carry to rays
    int ray0 = r.refined.cone_by_rays({0});
    CHECK(r.base->cone(r.carrier[static_cast<size_t>(ray0)]).ray_ids == std::vector<int>{0});
}

TEST_CASE("refinement restricted to a face is the refinement of the face") {
    for (const Fan& f : {cone_over_square(), cube_face_fan()}) {
        Refinement r = simplicial_refinement(f);
        for (const auto& c : f.cones()) {
            // maximal cells of the global refinement lying inside c
            std::set<std::vector<int>> inside;
            for (const auto& rc : r.refined.cones()) {
                if (rc.dim != c.dim) continue;
                if (std::includes(c.ray_ids.begin(), c.ray_ids.end(), rc.ray_ids.begin(),
                                  rc.ray_ids.end()))
                    inside.insert(rc.ray_ids);
            }
            auto own = r.cells[static_cast<size_t>(c.id)];
            CHECK(std::set<std::vector<int>>(own.begin(), own.end()) == inside);
        }
    }
}

TEST_CASE("cube face fan splits into 12 simplicial cones") {
    Fan f = cube_face_fan();
    CHECK(f.cones().size() == 27);
    Refinement r = simplicial_refinement(f);
    CHECK(r.refined.max_cone_ids().size() == 12);
    CHECK(is_simplicial_fan(r.refined));
    CHECK(is_complete(r.refined));
    // carriers never drop dimension below the refined cone's
    for (const auto& rc : r.refined.cones())
        CHECK(f.cone(r.carrier[static_cast<size_t>(rc.id)]).dim >= rc.dim);
}

TEST_CASE("coboundary signs compose to zero over codimension-2 pairs") {
    for (const Fan& f : {cone_over_square(), cube_face_fan()}) {
        OrientationData o(f);
        for (const auto& sigma : f.cones()) {
            if (sigma.dim < 2) continue;
            for (int gamma : sigma.face_ids) {
                if (f.cone(gamma).dim != sigma.dim - 2) continue;
                int total = 0;
                for (int tau : f.facets_of(sigma.id)) {
                    if (!f.is_face_of(gamma, tau)) continue;
                    total += o.sign(sigma.id, tau) * o.sign(tau, gamma);
                }
                CHECK(total == 0);
            }
        }
    }
}

TEST_CASE("projection fan of the cone over a square is the complete square fan") {
    Fan f = cone_over_square();
    int sigma = f.cone_by_rays({0, 1, 2, 3});
    ProjectionData p = projection_fan(f, sigma);
    CHECK(p.lambda.ambient_dim() == 2);
    CHECK(p.lambda.rays().size() == 4);
    CHECK(p.lambda.max_cone_ids().size() == 4);
    CHECK(is_complete(p.lambda));
    // combinatorial isomorphism with the boundary: inclusion preserved
    for (int a : f.cone(sigma).face_ids) {
        for (int b : f.cone(sigma).face_ids) {
            CHECK(f.is_face_of(a, b) ==
                  p.lambda.is_face_of(p.cone_map.at(a), p.cone_map.at(b)));
        }
    }
}

TEST_CASE("projection of a 2D cone and of a ray") {
    Fan f = build_fan(2, {v2(1, 0), v2(0, 1)}, {{0, 1}});
    ProjectionData p = projection_fan(f, f.cone_by_rays({0, 1}));
    CHECK(p.lambda.ambient_dim() == 1);
    CHECK(p.lambda.rays().size() == 2);
    CHECK(is_complete(p.lambda));

    ProjectionData pr = projection_fan(f, f.cone_by_rays({0}));
    CHECK(pr.lambda.ambient_dim() == 0);
    CHECK(pr.lambda.cones().size() == 1);
    CHECK(is_complete(pr.lambda));

    CHECK_THROWS_AS(projection_fan(f, f.zero_cone_id()), ZeroCone);
}

TEST_CASE("psi is the height functional on each facet image") {
    Fan f = cone_over_square();
    int sigma = f.cone_by_rays({0, 1, 2, 3});
    ProjectionData p = projection_fan(f, sigma);
    for (int g : f.facets_of(sigma)) {
        const VecQ& lam = p.psi_on_facet.at(g);
        for (int rid : f.cone(g).ray_ids) {
            VecQ y = p.project(f.ray(rid));
            Rational t = p.height(f.ray(rid));
            CHECK(lam.dot(y) == t);
        }
    }
}
