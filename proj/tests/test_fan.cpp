#include <catch2/catch_amalgamated.hpp>

#include "ihfan/fan.hpp"

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

static Fan square_fan() {
    return build_fan(2, {v2(1, 0), v2(0, 1), v2(-1, 0), v2(0, -1)},
                     {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

static Fan cone_over_square() {
    return build_fan(3, {v3(1, 0, 1), v3(0, 1, 1), v3(-1, 0, 1), v3(0, -1, 1)}, {{0, 1, 2, 3}});
}

TEST_CASE("square fan has 9 cones") {
    Fan f = square_fan();
    CHECK(f.cones().size() == 9);
    CHECK(f.cones_of_dim(0).size() == 1);
    CHECK(f.cones_of_dim(1).size() == 4);
    CHECK(f.cones_of_dim(2).size() == 4);
    CHECK(is_complete(f));
    CHECK(is_simplicial_fan(f));
    Subfan b = boundary_subfan(f);
    CHECK(b.cone_ids == std::vector<int>{f.zero_cone_id()});
}

TEST_CASE("cone over square is non-simplicial with full face lattice") {
    Fan f = cone_over_square();
    // o + 4 rays + 4 walls + sigma
    CHECK(f.cones().size() == 10);
    int sigma = f.cone_by_rays({0, 1, 2, 3});
    REQUIRE(sigma >= 0);
    CHECK(f.cone(sigma).dim == 3);
    CHECK_FALSE(is_simplicial(f, sigma));
    CHECK_FALSE(is_complete(f));

    // the diagonal {0,2} is not a face
    CHECK(f.cone_by_rays({0, 2}) == -1);
    CHECK_FALSE(is_face_rayset(f, sigma, {0, 2}));
    CHECK(is_face_rayset(f, sigma, {0, 1}));
    CHECK(is_face_rayset(f, sigma, {1, 2}));
    CHECK_FALSE(is_face_rayset(f, sigma, {0, 1, 2}));

    Subfan b = boundary_subfan(f);
    CHECK(b.cone_ids.size() == 9); // everything but sigma
    CHECK_FALSE(b.contains(sigma));
}

TEST_CASE("non-pointed cone rejected") {
    CHECK_THROWS_AS(build_fan(2, {v2(1, 0), v2(-1, 0)}, {{0, 1}}), NonPointedCone);
}

TEST_CASE("overlapping cones rejected") {
    // two overlapping quadrant cones sharing an interior region
    CHECK_THROWS_AS(
        build_fan(2, {v2(1, 0), v2(0, 1), v2(1, 1)}, {{0, 1}, {0, 2}}),
        ConesIntersectBadly);
    // a cone listed inside another without being a face
    CHECK_THROWS_AS(
        build_fan(3, {v3(1, 0, 1), v3(0, 1, 1), v3(-1, 0, 1), v3(0, -1, 1)},
                  {{0, 1, 2, 3}, {0, 1, 2}}),
        ConesIntersectBadly);
}

TEST_CASE("half-plane fan boundary") {
    Fan f = build_fan(2, {v2(1, 0), v2(0, 1), v2(-1, 0)}, {{0, 1}, {1, 2}});
    CHECK_FALSE(is_complete(f));
    Subfan b = boundary_subfan(f);
    std::set<int> expect = {f.zero_cone_id(), f.cone_by_rays({0}), f.cone_by_rays({2})};
    CHECK(std::set<int>(b.cone_ids.begin(), b.cone_ids.end()) == expect);
}

TEST_CASE("two cones meeting only at the origin form a valid fan") {
    Fan f = build_fan(2, {v2(1, 0), v2(0, 1), v2(-1, 0), v2(0, -1)}, {{0, 1}, {2, 3}});
    CHECK(f.cones().size() == 7);
    CHECK_FALSE(is_complete(f));
    Subfan b = boundary_subfan(f);
    CHECK(b.cone_ids.size() == 5); // four rays + o
}

TEST_CASE("face lattice is transitively closed and geometrically sound") {
    Fan f = cone_over_square();
    for (const auto& c : f.cones()) {
        for (int fid : c.face_ids) {
            for (int ffid : f.cone(fid).face_ids) {
                CHECK(f.is_face_of(ffid, c.id));
            }
        }
    }
    // exhaustive geometric re-derivation on the maximal cone
    int sigma = f.cone_by_rays({0, 1, 2, 3});
    const auto& rays = f.cone(sigma).ray_ids;
    for (int mask = 0; mask < (1 << 4); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < 4; ++i)
            if (mask & (1 << i)) sub.push_back(rays[static_cast<size_t>(i)]);
        bool stored = f.cone_by_rays(sub) >= 0 && f.is_face_of(f.cone_by_rays(sub), sigma);
        CHECK(stored == is_face_rayset(f, sigma, sub));
    }
}

TEST_CASE("primitivize rescales to integer primitive vectors") {
    VecQ v(2);
    v << Rational(2, 3), Rational(4, 3);
    VecQ p = primitivize(v);
    CHECK(p(0) == 1);
    CHECK(p(1) == 2);
}

TEST_CASE("zero fan in dimension zero") {
    Fan f = build_fan(0, {}, {});
    CHECK(f.cones().size() == 1);
    CHECK(is_complete(f));
}

TEST_CASE("boundary subfan of a mixed-dimension fan is refused") {
    // a 2-cone together with an isolated ray
    Fan f = build_fan(2, {v2(1, 0), v2(0, 1), v2(-1, -3)}, {{0, 1}, {2}});
    CHECK_THROWS_AS(boundary_subfan(f), NotPure);
    CHECK_FALSE(is_complete(f));
}
