#include <doctest.h>

#include "shiarr/arrangement.hpp"
#include "shiarr/counting.hpp"

using namespace shiarr;

TEST_CASE("count_shi_regions") {
    CHECK(count_shi_regions(3, 1) == 16);
    CHECK(count_shi_regions(1, 7) == 1);
    CHECK(count_shi_regions(3, 2) == 49);
    CHECK(count_shi_regions(4, 1) == 125);
    CHECK(count_shi_regions(2, 1) == 3);
    CHECK_THROWS_AS(count_shi_regions(0, 1), InvalidInput);
}

TEST_CASE("product formula for qualifying graphs") {
    for (int n = 2; n <= 4; ++n) {
        CHECK(count_graphical_regions(SimpleGraph::complete(n)) == count_shi_regions(n, 1));
        CHECK(count_graphical_regions(SimpleGraph::empty_graph(n)) == factorial(n));
    }
    const SimpleGraph g(4, {{1, 3}, {1, 4}, {2, 4}});
    REQUIRE(graphical_product_hypothesis(g));
    CHECK(count_graphical_regions(g) == 64);
    CHECK((long long)enumerate_regions(graphical_shi_arrangement(g)).size() == 64);
}

TEST_CASE("product formula rejects non-qualifying graphs") {
    // {1,2} is an edge but {1,3} is not
    const SimpleGraph path = SimpleGraph::path(3);
    CHECK_FALSE(graphical_product_hypothesis(path));
    CHECK_THROWS_AS(count_graphical_regions(path), InvalidInput);
}

TEST_CASE("path formula") {
    CHECK(count_path_regions(2) == 3);
    CHECK(count_path_regions(3) == 13);
    CHECK(count_path_regions(4) == 73);
    CHECK((long long)enumerate_regions(graphical_shi_arrangement(SimpleGraph::path(4))).size() ==
          73);
}

TEST_CASE("family formula") {
    CHECK(count_family_regions(3, 0, 2) == 16);
    CHECK(count_family_regions(3, 1, 3) == 20);
    CHECK(count_family_regions(2, 1, 2) == 4);
    CHECK(count_family_regions(3, 0, 3) == 12);
    // k = n+1 with m coincides with k = 2 with m-1
    for (int n = 2; n <= 5; ++n)
        for (int m = 1; m <= 3; ++m)
            CHECK(count_family_regions(n, m, n + 1) == count_family_regions(n, m - 1, 2));
    CHECK_THROWS_AS(count_family_regions(3, 0, 6), InvalidInput);
}

TEST_CASE("family recursion identity") {
    CHECK(family_recursion_holds(6, 4));
    CHECK(count_family_regions(3, 0, 2) ==
          count_family_regions(3, 0, 3) + count_family_regions(2, 1, 2));
}

TEST_CASE("face count formula") {
    CHECK(shi_face_count(2, 1) == 2);
    CHECK(shi_face_count(2, 2) == 3);
    CHECK(shi_face_count(3, 1) == 6);
    CHECK(shi_face_count(3, 2) == 21);
    CHECK(shi_face_count(3, 3) == 16);
    for (int n = 2; n <= 5; ++n) CHECK(shi_face_count(n, n) == count_shi_regions(n, 1));
    CHECK_THROWS_AS(shi_face_count(3, 0), InvalidInput);
    CHECK_THROWS_AS(shi_face_count(3, 4), InvalidInput);
}

TEST_CASE("face formula agrees with brute-force map enumeration") {
    for (int n = 2; n <= 5; ++n)
        for (int dim = 1; dim <= n; ++dim)
            CHECK(shi_face_count(n, dim) == shi_face_count_bruteforce(n, dim));
}
