#include <catch2/catch_amalgamated.hpp>

#include "ihfan/poincare.hpp"

using namespace ihfan;

static PoincarePoly P(std::vector<int> v) {
    std::vector<Integer> c;
    for (int x : v) c.push_back(Integer(x));
    return PoincarePoly(c);
}

TEST_CASE("ring operations") {
    CHECK(P({1}) * P({1, 1}) == P({1, 1}));
    CHECK(t2_minus_1_pow(2) == P({1, -2, 1}));
    CHECK(one_minus_t2() * P({1, 2, 1}) == P({1, 1, -1, -1}));
}

TEST_CASE("truncation keeps t-degrees strictly below the bound") {
    PoincarePoly p = P({1, 1, -1, -1}); // 1 + t^2 - t^4 - t^6
    CHECK(p.truncate_below(3) == P({1, 1}));
    CHECK(p.truncate_below(0) == PoincarePoly::zero());
    CHECK(p.truncate_below(100) == p);
    CHECK(p.truncate_below(2) == P({1}));
    CHECK(p.truncate_below(4) == P({1, 1}));
}

TEST_CASE("duality transform reverses the coefficient window") {
    PoincarePoly cube = P({1, 5, 5, 1});
    CHECK(cube.duality_transform(3) == cube);
    CHECK(cube.is_palindromic(3));

    CHECK(P({1}).duality_transform(2) == P({0, 0, 1}));
    CHECK(P({1, 1}).duality_transform(3) == P({0, 0, 1, 1}));
    CHECK_THROWS_AS(P({1, 1, 1}).duality_transform(1), DegreeTooHigh);

    // involution on the window
    PoincarePoly p = P({1, 4, 2});
    CHECK(p.duality_transform(4).duality_transform(4) == p);
}

TEST_CASE("h and g extraction") {
    PoincarePoly cube = P({1, 5, 5, 1});
    CHECK(cube.as_h_vector() == std::vector<Integer>{1, 5, 5, 1});
    CHECK(cube.g_vector(3) == std::vector<Integer>{1, 4});

    PoincarePoly square = P({1, 2, 1});
    CHECK(square.g_vector(2) == std::vector<Integer>{1, 1});

    CHECK(P({1}).g_vector(0) == std::vector<Integer>{1});
}

TEST_CASE("rendering") {
    CHECK(P({1, 5, 5, 1}).str() == "1 + 5t^2 + 5t^4 + t^6");
    CHECK(P({1, -2, 1}).str() == "1 - 2t^2 + t^4");
    CHECK(PoincarePoly::zero().str() == "0");
    CHECK(P({0, 0, 1, 1}).str() == "t^4 + t^6");
}

TEST_CASE("truncation split identity") {
    PoincarePoly p = P({3, 1, 4, 1, 5});
    for (int j = 0; j <= 12; ++j) {
        CHECK(p.truncate_below(j) + (p - p.truncate_below(j)) == p);
    }
}
