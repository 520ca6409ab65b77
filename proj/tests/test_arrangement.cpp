#include <doctest.h>

#include <array>
#include <map>
#include <random>

#include "shiarr/arrangement.hpp"
#include "shiarr/bijection.hpp"
#include "shiarr/counting.hpp"

using namespace shiarr;

TEST_CASE("builders produce the stated hyperplane lists") {
    const Arrangement s3 = shi_arrangement(3);
    CHECK(s3.hyperplanes == std::vector<Hyperplane>{{1, 2, 0},
                                                    {1, 2, 1},
                                                    {1, 3, 0},
                                                    {1, 3, 1},
                                                    {2, 3, 0},
                                                    {2, 3, 1}});

    const Arrangement e32 = extended_shi_arrangement(3, 2);
    CHECK(e32.hyperplanes.size() == 12);
    for (const auto& h : e32.hyperplanes) {
        CHECK(h.c >= -1);
        CHECK(h.c <= 2);
    }

    CHECK(family_arrangement(3, 0, 2) == s3);
    CHECK(braid_arrangement(3).hyperplanes ==
          std::vector<Hyperplane>{{1, 2, 0}, {1, 3, 0}, {2, 3, 0}});

    const Arrangement path3 = graphical_shi_arrangement(SimpleGraph::path(3));
    CHECK(path3.hyperplanes == std::vector<Hyperplane>{{1, 2, 0},
                                                       {1, 2, 1},
                                                       {1, 3, 0},
                                                       {2, 3, 0},
                                                       {2, 3, 1}});

    CHECK_THROWS_AS(shi_arrangement(1), InvalidInput);
    CHECK_THROWS_AS(extended_shi_arrangement(3, 0), InvalidInput);
    CHECK_THROWS_AS(family_arrangement(3, -1, 2), InvalidInput);
    CHECK_THROWS_AS(family_arrangement(3, 0, 5), InvalidInput);
    CHECK_THROWS_AS(family_arrangement(3, 0, 1), InvalidInput);
}

TEST_CASE("difference-constraint solver basics") {
    CHECK_FALSE(solve_difference_constraints(
        2, {{1, 2, Rel::Greater, 0}, {2, 1, Rel::Greater, 0}}));

    const auto w = solve_difference_constraints(2, {{1, 2, Rel::Greater, 1}});
    REQUIRE(w.has_value());
    CHECK((*w)[0] - (*w)[1] > Rational(1));

    const auto eq = solve_difference_constraints(
        3, {{1, 2, Rel::Equal, 2}, {2, 3, Rel::Greater, 0}, {1, 3, Rel::Less, 3}});
    REQUIRE(eq.has_value());
    CHECK((*eq)[0] - (*eq)[1] == Rational(2));

    CHECK_THROWS_AS(solve_difference_constraints(2, {{0, 1, Rel::Less, 0}}), InvalidInput);
}

TEST_CASE("solver verdicts match a grid search oracle") {
    // Feasible systems admit a witness with integer part in [-5,5] and
    // epsilon multiplicity in [-3,0]; scanning that grid decides
    // feasibility independently of the Bellman-Ford route.
    std::mt19937 rng(987654);
    const int n = 3;
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 2 + (int)(rng() % 5);
        std::vector<Constraint> cs;
        for (int t = 0; t < m; ++t) {
            int i = 1 + (int)(rng() % n), j = 1 + (int)(rng() % n);
            while (j == i) j = 1 + (int)(rng() % n);
            const Rel rel = std::array{Rel::Less, Rel::Greater, Rel::Equal}[rng() % 3];
            cs.push_back({i, j, rel, (int)(rng() % 5) - 2});
        }

        // grid point index -> (integer part, epsilon multiplicity)
        const int kGrid = 11 * 4;
        auto grid_value = [](int idx) { return std::pair{idx / 4 - 5, idx % 4 - 3}; };
        bool grid_found = false;
        std::array<std::pair<int, int>, 3> x;
        for (int g0 = 0; g0 < kGrid && !grid_found; ++g0)
            for (int g1 = 0; g1 < kGrid && !grid_found; ++g1)
                for (int g2 = 0; g2 < kGrid && !grid_found; ++g2) {
                    x = {grid_value(g0), grid_value(g1), grid_value(g2)};
                    bool ok = true;
                    for (const auto& c : cs) {
                        const int da = x[c.i - 1].first - x[c.j - 1].first;
                        const int db = x[c.i - 1].second - x[c.j - 1].second;
                        const bool less = da < c.c || (da == c.c && db < 0);
                        const bool equal = da == c.c && db == 0;
                        const bool sat = c.rel == Rel::Less      ? less
                                         : c.rel == Rel::Greater ? !less && !equal
                                                                 : equal;
                        if (!sat) { ok = false; break; }
                    }
                    grid_found = ok;
                }

        CHECK(solve_difference_constraints(n, cs).has_value() == grid_found);
    }
}

TEST_CASE("region counts from the oracle") {
    CHECK(enumerate_regions(braid_arrangement(3)).size() == 6);
    CHECK(enumerate_regions(shi_arrangement(2)).size() == 3);
    CHECK(enumerate_regions(shi_arrangement(3)).size() == 16);
    CHECK(enumerate_regions(extended_shi_arrangement(3, 2)).size() == 49);
    CHECK(enumerate_regions(graphical_shi_arrangement(SimpleGraph::path(3))).size() == 13);
}

TEST_CASE("regions carry exact interior witnesses and are deterministic") {
    const Arrangement a = shi_arrangement(3);
    const auto regions = enumerate_regions(a);
    for (const auto& r : regions)
        CHECK(region_from_witness(a, r.witness).signs == r.signs);
    CHECK(enumerate_regions(a) == regions);
}

TEST_CASE("face enumeration") {
    auto fvector = [](const Arrangement& a) {
        std::map<int, int> fv;
        for (const auto& f : enumerate_faces(a)) ++fv[f.dim];
        return fv;
    };
    CHECK(fvector(shi_arrangement(2)) == std::map<int, int>{{1, 2}, {2, 3}});
    CHECK(fvector(braid_arrangement(2)) == std::map<int, int>{{1, 1}, {2, 2}});
    CHECK(fvector(shi_arrangement(3)) == std::map<int, int>{{1, 6}, {2, 21}, {3, 16}});
}

TEST_CASE("face witnesses satisfy their sign vectors exactly") {
    const Arrangement a = shi_arrangement(2);
    for (const auto& f : enumerate_faces(a)) {
        for (size_t h = 0; h < a.hyperplanes.size(); ++h) {
            const auto& plane = a.hyperplanes[h];
            const Rational diff = f.witness[plane.i - 1] - f.witness[plane.j - 1];
            const int sign = diff > Rational(plane.c) ? 1 : diff < Rational(plane.c) ? -1 : 0;
            const int expected = f.signs[h] == '+' ? 1 : f.signs[h] == '-' ? -1 : 0;
            CHECK(sign == expected);
        }
    }
}

TEST_CASE("braid regions give arcless diagrams") {
    const Arrangement a = braid_arrangement(3);
    for (const auto& r : enumerate_regions(a)) {
        const Diagram d = region_to_diagram(r, a);
        CHECK(d.arcs.empty());
    }
}

TEST_CASE("the S_9 region with the reference inequalities yields the reference diagram") {
    const Diagram expected({2, 4, 6, 8, 5, 1, 9, 7, 3},
                           {{2, 6}, {6, 9}, {4, 5}, {5, 7}, {1, 3}});
    const std::vector<int>& word = expected.word;
    std::vector<int> pos(10);
    for (int p = 0; p < 9; ++p) pos[word[p]] = p + 1;

    std::vector<Constraint> cs;
    for (int p = 0; p + 1 < 9; ++p) cs.push_back({word[p], word[p + 1], Rel::Greater, 0});
    // x_i - x_j > 1 exactly when the position span encloses an arc span
    for (int i = 1; i <= 9; ++i)
        for (int j = i + 1; j <= 9; ++j) {
            if (pos[i] >= pos[j]) continue;
            bool forced = false;
            for (const auto& [u, v] : expected.arcs)
                forced |= pos[i] <= pos[u] && pos[v] <= pos[j];
            cs.push_back({i, j, forced ? Rel::Greater : Rel::Less, 1});
        }

    const auto witness = solve_difference_constraints(9, cs);
    REQUIRE(witness.has_value());
    const Arrangement a = shi_arrangement(9);
    const Region r = region_from_witness(a, *witness);
    CHECK(region_to_diagram(r, a) == expected);
    CHECK(parking_from_diagram(expected).values == std::vector<int>{6, 1, 6, 2, 2, 1, 2, 4, 1});
}

TEST_CASE("the S_4^2 region with the reference inequalities yields the reference k-diagram") {
    const std::vector<Constraint> cs = {
        {2, 1, Rel::Greater, 0},  // x_2 + 1 > x_1 + 1 and x_2 > x_1
        {2, 1, Rel::Less, 1},     // x_1 + 1 > x_2
        {1, 4, Rel::Greater, 1},  // x_1 > x_4 + 1
        {4, 3, Rel::Greater, 0},  // x_4 + 1 > x_3 + 1 and x_4 > x_3
        {4, 3, Rel::Less, 1},     // x_3 + 1 > x_4
        {2, 4, Rel::Greater, 2},
        {1, 3, Rel::Less, 2},
    };
    const auto witness = solve_difference_constraints(4, cs);
    REQUIRE(witness.has_value());
    const Arrangement a = extended_shi_arrangement(4, 2);
    const Region r = region_from_witness(a, *witness);
    const KDiagram kd = region_to_kdiagram(r, a, 2);
    CHECK(kd == KDiagram(2, {2, 1, 2, 1, 4, 3, 4, 3}, {{1, 3}, {2, 4}, {3, 5}, {5, 7}, {6, 8}}));
    CHECK(chain_partition(kd).blocks ==
          std::vector<std::vector<int>>{{2, 2, 4, 4}, {1, 1}, {3, 3}});
    CHECK(parking_from_kdiagram(kd).values == std::vector<int>{2, 1, 6, 1});
}

TEST_CASE("finite-field point counts") {
    CHECK(count_points_off_hyperplanes(shi_arrangement(2), 5) == 15);
    CHECK(count_points_off_hyperplanes(shi_arrangement(3), 7) == 112);
    CHECK(count_points_off_hyperplanes(braid_arrangement(2), 3) == 6);

    CHECK_THROWS_AS(count_points_off_hyperplanes(shi_arrangement(2), 4), InvalidInput);
    CHECK_THROWS_AS(count_points_off_hyperplanes(shi_arrangement(2), 3), InvalidInput);
}

TEST_CASE("characteristic polynomial and Zaslavsky counts") {
    // chi(shi(3)) = q(q-3)^2 = q^3 - 6q^2 + 9q
    CHECK(characteristic_polynomial(shi_arrangement(3)) ==
          std::vector<long long>{0, 9, -6, 1});
    CHECK(zaslavsky_region_count(shi_arrangement(3)) == 16);
    CHECK(zaslavsky_region_count(braid_arrangement(3)) == 6);
    CHECK(zaslavsky_region_count(extended_shi_arrangement(3, 2)) == 49);
}

TEST_CASE("deletion and restriction agree with enumeration on the family") {
    for (int n = 3; n <= 4; ++n)
        for (int m = 0; m <= 2; ++m)
            for (int k = 2; k <= n; ++k) {
                const auto total = enumerate_regions(family_arrangement(n, m, k)).size();
                const auto deleted = enumerate_regions(family_arrangement(n, m, k + 1)).size();
                const auto restricted =
                    enumerate_regions(family_arrangement(n - 1, m + 1, k)).size();
                CHECK(total == deleted + restricted);
            }
}

TEST_CASE("extended region counts match the closed form at k = 2") {
    for (int n = 2; n <= 4; ++n)
        CHECK((long long)enumerate_regions(extended_shi_arrangement(n, 2)).size() ==
              count_shi_regions(n, 2));
}
