#include <catch2/catch_amalgamated.hpp>

#include "ihfan/recursion.hpp"

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
static VecQ v4(int a, int b, int c, int d) {
    VecQ v(4);
    v << a, b, c, d;
    return v;
}

static PoincarePoly P(std::vector<int> v) {
    std::vector<Integer> c;
    for (int x : v) c.push_back(Integer(x));
    return PoincarePoly(c);
}

static Fan square_fan() {
    return build_fan(2, {v2(1, 0), v2(0, 1), v2(-1, 0), v2(0, -1)},
                     {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
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

static Fan cone_over_cube() {
    std::vector<VecQ> rays;
    for (int x : {-1, 1})
        for (int y : {-1, 1})
            for (int z : {-1, 1}) rays.push_back(v4(x, y, z, 1));
    return build_fan(4, rays, {{0, 1, 2, 3, 4, 5, 6, 7}});
}

TEST_CASE("local polynomials of simplicial cones are 1") {
    Fan f = square_fan();
    for (const auto& c : f.cones()) CHECK(local_poly(f, c.id) == PoincarePoly::one());
}

TEST_CASE("local polynomial of the cone over a square") {
    Fan f = cone_over_square();
    CHECK(local_poly(f, f.cone_by_rays({0, 1, 2, 3})) == P({1, 1}));
}

TEST_CASE("local polynomial of the cone over the 3-cube") {
    Fan f = cone_over_cube();
    CHECK(local_poly(f, f.cone_by_rays({0, 1, 2, 3, 4, 5, 6, 7})) == P({1, 4}));
}

TEST_CASE("global polynomial of the square fan") {
    CHECK(global_poly(square_fan(), false) == P({1, 2, 1}));
}

TEST_CASE("global polynomial of the cube face fan") {
    Fan f = cube_face_fan();
    PoincarePoly p = global_poly(f, false);
    CHECK(p == P({1, 5, 5, 1}));
    CHECK(p.as_h_vector() == std::vector<Integer>{1, 5, 5, 1});
    CHECK(p.g_vector(3) == std::vector<Integer>{1, 4});
}

TEST_CASE("affine cone over square: absolute and relative polynomials") {
    Fan f = cone_over_square();
    CHECK(global_poly(f, false) == P({1, 1}));
    CHECK(global_poly(f, true) == P({0, 0, 1, 1}));
}

TEST_CASE("duality identity") {
    CHECK(check_duality(cube_face_fan()).holds);
    CHECK(check_duality(cone_over_square()).holds);
    CHECK(check_duality(square_fan()).holds);
    // half-plane fan: quasi-convex but not syntactically so
    Fan half = build_fan(2, {v2(1, 0), v2(0, 1), v2(-1, 0)}, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(global_poly(half, false), NotQuasiConvexHint);
    DualityReport r = check_duality(half, /*assume_quasi_convex=*/true);
    CHECK(r.absolute == P({1, 1}));
    CHECK(r.relative == P({0, 1, 1}));
    CHECK(r.holds);
}

TEST_CASE("degree bound audit") {
    for (const Fan& f : {square_fan(), cube_face_fan(), cone_over_square()}) {
        DegreeBoundAudit a = degree_bound_audit(f);
        CHECK(a.relative_monic_2n);
        CHECK(a.absolute_degree_ok);
        CHECK(a.local_degrees_ok);
        CHECK(a.all());
    }
}

TEST_CASE("memoized table matches one-shot computation") {
    Fan f = cube_face_fan();
    LocalPolyTable t(f);
    for (const auto& c : f.cones()) CHECK(t.local_poly(c.id) == local_poly(f, c.id));
}
