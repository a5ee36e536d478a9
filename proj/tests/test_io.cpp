#include <catch2/catch_amalgamated.hpp>

#include "ihfan/fan_io.hpp"
#include "ihfan/hull.hpp"
#include "ihfan/recursion.hpp"
#include "ihfan/report.hpp"

#include <fstream>
#include <sstream>

using namespace ihfan;

static PoincarePoly P(std::vector<int> v) {
    std::vector<Integer> c;
    for (int x : v) c.push_back(Integer(x));
    return PoincarePoly(c);
}

TEST_CASE("documents parse and round trip") {
    FanDocument doc = example_document("square");
    Fan f = document_to_fan(doc);
    CHECK(f.cones().size() == 9);

    std::string text = emit_fan_document(doc);
    FanDocument back = parse_fan_document(text);
    Fan g = document_to_fan(back);
    REQUIRE(g.cones().size() == f.cones().size());
    for (const auto& c : f.cones()) {
        int id = g.cone_by_rays(c.ray_ids);
        REQUIRE(id >= 0);
        CHECK(g.cone(id).face_ids == c.face_ids);
    }
}

TEST_CASE("schema errors carry the offending field") {
    CHECK_THROWS_AS(parse_fan_document("not json"), SchemaError);
    CHECK_THROWS_AS(parse_fan_document("{}"), SchemaError);
    CHECK_THROWS_WITH(
        parse_fan_document(R"({"ambient_dim":2,"rays":[[1,0],[1]],"cones":[]})"),
        Catch::Matchers::ContainsSubstring("ray 1"));
    CHECK_THROWS_WITH(
        parse_fan_document(R"({"ambient_dim":2,"rays":[[1,0]],"cones":[[3]]})"),
        Catch::Matchers::ContainsSubstring("cone 0"));
    CHECK_THROWS_WITH(
        parse_fan_document(
            R"({"ambient_dim":2,"rays":[[1,0],[0,1]],"cones":[[0,1]],"schema_version":7})"),
        Catch::Matchers::ContainsSubstring("schema_version"));
}

TEST_CASE("a document with a non-pointed cone names the cone") {
    FanDocument doc = parse_fan_document(
        R"({"ambient_dim":2,"rays":[[1,0],[-1,0]],"cones":[[0,1]]})");
    CHECK_THROWS_AS(document_to_fan(doc), NonPointedCone);
}

TEST_CASE("the cube face fan document has 27 cones") {
    Fan f = document_to_fan(example_document("cube-face-fan"));
    CHECK(f.cones().size() == 27);
    CHECK(global_poly(f, false) == P({1, 5, 5, 1}));
}

TEST_CASE("polytope to fan: cube and square") {
    std::vector<VecQ> cube;
    for (int x : {-1, 1})
        for (int y : {-1, 1})
            for (int z : {-1, 1}) {
                VecQ v(3);
                v << x, y, z;
                cube.push_back(v);
            }
    Fan face = polytope_to_fan(cube, PolytopeFanMode::face_fan);
    CHECK(face.cones().size() == 27);
    CHECK(global_poly(face, false) == P({1, 5, 5, 1}));

    // normal fan of the cube: the fan of the octahedron directions
    Fan normal = polytope_to_fan(cube, PolytopeFanMode::normal_fan);
    CHECK(normal.rays().size() == 6);
    CHECK(is_complete(normal));
    CHECK(is_simplicial_fan(normal));
    CHECK(global_poly(normal, false) == P({1, 3, 3, 1}));

    std::vector<VecQ> square;
    for (int x : {0, 2})
        for (int y : {0, 2}) {
            VecQ v(2);
            v << x, y;
            square.push_back(v);
        }
    Fan sq = polytope_to_fan(square, PolytopeFanMode::face_fan);
    CHECK(global_poly(sq, false) == P({1, 2, 1}));
}

TEST_CASE("simplex fans have all-ones h-vectors") {
    std::vector<VecQ> simplex;
    for (int i = 0; i < 4; ++i) {
        VecQ v = VecQ::Zero(3);
        if (i < 3) v(i) = 1;
        else v << -1, -1, -1;
        simplex.push_back(v);
    }
    Fan f = polytope_to_fan(simplex, PolytopeFanMode::face_fan);
    CHECK(global_poly(f, false) == P({1, 1, 1, 1}));
}

TEST_CASE("degenerate polytope input is rejected") {
    std::vector<VecQ> flat;
    for (int i = 0; i < 4; ++i) {
        VecQ v(3);
        v << i, 2 * i, 0;
        flat.push_back(v);
    }
    CHECK_THROWS_AS(polytope_to_fan(flat, PolytopeFanMode::face_fan), DegenerateInput);

    // a point interior to the hull is not a vertex
    std::vector<VecQ> with_center;
    for (int x : {-1, 1})
        for (int y : {-1, 1}) {
            VecQ v(2);
            v << x, y;
            with_center.push_back(v);
        }
    VecQ center(2);
    center << 0, 0;
    with_center.push_back(center);
    CHECK_THROWS_WITH(polytope_to_fan(with_center, PolytopeFanMode::face_fan),
                      Catch::Matchers::ContainsSubstring("not a vertex"));
}

TEST_CASE("golden document files parse to the bundled fans") {
    for (const char* name : {"square", "cube-face-fan", "cone-over-square"}) {
        std::ifstream in(std::string(IHFAN_SOURCE_DIR) + "/fans/" + name + ".json");
        REQUIRE(in.good());
        std::stringstream buf;
        buf << in.rdbuf();
        Fan from_file = document_to_fan(parse_fan_document(buf.str()));
        Fan generated = document_to_fan(example_document(name));
        REQUIRE(from_file.cones().size() == generated.cones().size());
        for (const auto& c : generated.cones()) CHECK(from_file.cone_by_rays(c.ray_ids) >= 0);
    }
}

TEST_CASE("bundled examples all build") {
    for (const auto& name : example_names()) {
        Fan f = document_to_fan(example_document(name, 7));
        CHECK(f.cones().size() >= 1);
    }
}

TEST_CASE("verify passes end to end on quasi-convex examples and flags the contrast fan") {
    for (const char* name : {"square", "cone-over-square", "half-plane"}) {
        Outcome out = verify_report(document_to_fan(example_document(name)), -1);
        CHECK(out.ok);
        CHECK(out.report["axioms"]["pointwise_freeness"] == true);
    }
    Outcome bad = verify_report(document_to_fan(example_document("bad-boundary")), -1);
    CHECK_FALSE(bad.ok);
    CHECK(bad.report["quasi_convex"] == "no-oracle");
}

TEST_CASE("random generators are deterministic per seed") {
    for (const char* name : {"random-simplicial-2d", "random-simplicial-3d"}) {
        FanDocument a = example_document(name, 42);
        FanDocument b = example_document(name, 42);
        CHECK(emit_fan_document(a) == emit_fan_document(b));
        Fan f = document_to_fan(a);
        CHECK(is_complete(f));
        CHECK(is_simplicial_fan(f));
    }
}
