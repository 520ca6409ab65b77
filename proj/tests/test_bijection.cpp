#include <doctest.h>

#include <set>

#include "shiarr/arrangement.hpp"
#include "shiarr/bijection.hpp"
#include "shiarr/counting.hpp"

using namespace shiarr;

namespace {

const Diagram& fig2() {
    static const Diagram d({2, 4, 6, 8, 5, 1, 9, 7, 3},
                           {{2, 6}, {6, 9}, {4, 5}, {5, 7}, {1, 3}});
    return d;
}

const KDiagram& fig4() {
    static const KDiagram d(2, {2, 1, 2, 1, 4, 3, 4, 3},
                            {{1, 3}, {2, 4}, {3, 5}, {5, 7}, {6, 8}});
    return d;
}

}  // namespace

TEST_CASE("parking_from_diagram on reference diagrams") {
    CHECK(parking_from_diagram(fig2()).values ==
          std::vector<int>{6, 1, 6, 2, 2, 1, 2, 4, 1});
    CHECK(parking_from_diagram(Diagram({1}, {})).values == std::vector<int>{1});
    CHECK(parking_from_diagram(Diagram({1, 2}, {{1, 2}})).values == std::vector<int>{1, 1});
    CHECK(parking_from_diagram(Diagram({1, 2}, {})).values == std::vector<int>{1, 2});
    CHECK(parking_from_diagram(Diagram({2, 1}, {})).values == std::vector<int>{2, 1});
    CHECK_THROWS_AS(parking_from_diagram(Diagram({1, 2, 3}, {{1, 3}, {2, 3}})), InvalidInput);
}

TEST_CASE("diagram_from_parking on reference parking functions") {
    CHECK(diagram_from_parking(ParkingFunction({6, 1, 6, 2, 2, 1, 2, 4, 1})) == fig2());
    CHECK(diagram_from_parking(ParkingFunction({1, 2, 3, 4})) == Diagram({1, 2, 3, 4}, {}));
    CHECK(diagram_from_parking(ParkingFunction({1, 1})) == Diagram({1, 2}, {{1, 2}}));
    CHECK_THROWS_AS(ParkingFunction({2, 2}), InvalidInput);
}

TEST_CASE("graph-restricted inverse rejects with the violating pair") {
    try {
        diagram_from_parking(ParkingFunction({1, 1, 2}), SimpleGraph(3, {{2, 3}}));
        FAIL("expected InvalidInput");
    } catch (const InvalidInput& e) {
        CHECK(std::string(e.what()).find("{1,2}") != std::string::npos);
    }
    // the graph only gates the precondition: the diagram itself is unchanged
    const auto f = ParkingFunction({1, 1, 2});
    CHECK(diagram_from_parking(f, SimpleGraph(3, {{1, 2}})) == diagram_from_parking(f));
}

TEST_CASE("round trip over every parking function up to n = 5") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& kf : enumerate_k_parking(n, 1)) {
            const ParkingFunction f = kf.as_parking();
            const Diagram d = diagram_from_parking(f);
            CHECK(validate_diagram(d));
            CHECK(parking_from_diagram(d) == f);
        }
}

TEST_CASE("round trip from oracle diagrams up to n = 4") {
    for (int n = 2; n <= 4; ++n) {
        const Arrangement a = shi_arrangement(n);
        for (const auto& r : enumerate_regions(a)) {
            const Diagram d = region_to_diagram(r, a);
            CHECK(diagram_from_parking(parking_from_diagram(d)) == d);
        }
    }
}

TEST_CASE("graphical restriction: image equals the condition-passing parking functions") {
    for (int n = 2; n <= 4; ++n) {
        const int pair_count = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> pairs;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
        for (unsigned mask = 0; mask < (1u << pair_count); ++mask) {
            std::set<std::pair<int, int>> edges;
            for (int t = 0; t < pair_count; ++t)
                if (mask & (1u << t)) edges.insert(pairs[t]);
            const SimpleGraph g(n, edges);
            const Arrangement a = graphical_shi_arrangement(g);

            std::set<std::vector<int>> image;
            for (const auto& r : enumerate_regions(a)) {
                const Diagram d = region_to_diagram(r, a);
                // consecutive chain elements are edges of g
                for (const auto& block : chain_partition(d).blocks)
                    for (size_t t = 0; t + 1 < block.size(); ++t)
                        CHECK(g.has_edge(block[t], block[t + 1]));
                image.insert(parking_from_diagram(d).values);
                CHECK(region_to_diagram(r, a) == diagram_from_parking(parking_from_diagram(d), g));
            }

            std::set<std::vector<int>> expected;
            for (const auto& f : enumerate_k_parking(n, 1))
                if (satisfies_graph_condition(f.values, g)) expected.insert(f.values);
            CHECK(image == expected);
        }
    }
}

TEST_CASE("parking_from_kdiagram on reference diagrams") {
    CHECK(parking_from_kdiagram(fig4()).values == std::vector<int>{2, 1, 6, 1});
    CHECK(parking_from_kdiagram(KDiagram(3, {1, 1, 1}, {{1, 2}, {2, 3}})).values ==
          std::vector<int>{1});
    CHECK_THROWS_AS(parking_from_kdiagram(KDiagram(2, {1, 2, 1, 2}, {{2, 4}})), InvalidInput);
}

TEST_CASE("kdiagram_from_parking on reference parking functions") {
    CHECK(kdiagram_from_parking(KParkingFunction(2, {2, 1, 6, 1})) == fig4());
    // a single value class fuses everything into one chain
    const KDiagram ones = kdiagram_from_parking(KParkingFunction(2, {1, 1, 1}));
    CHECK(ones.word == std::vector<int>{1, 1, 2, 2, 3, 3});
    CHECK(ones.arcs == std::set<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
    CHECK_THROWS_AS(KParkingFunction(2, {4, 1}), InvalidInput);
}

TEST_CASE("sigma_k specializes to sigma at k = 1") {
    const Arrangement a = shi_arrangement(3);
    const Arrangement e = extended_shi_arrangement(3, 1);
    REQUIRE(a == e);
    for (const auto& r : enumerate_regions(a)) {
        const Diagram d = region_to_diagram(r, a);
        const KDiagram kd = region_to_kdiagram(r, e, 1);
        CHECK(parking_from_kdiagram(kd).values == parking_from_diagram(d).values);
        CHECK(kd.word == d.word);
    }
}

TEST_CASE("k round trips, exhaustive") {
    for (auto [n, k] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        std::set<std::vector<int>> words;
        for (const auto& f : enumerate_k_parking(n, k)) {
            const KDiagram d = kdiagram_from_parking(f);
            CHECK(validate_diagram(d));
            CHECK(parking_from_kdiagram(d) == f);
            words.insert(d.word);
        }
        CHECK((long long)enumerate_k_parking(n, k).size() == count_shi_regions(n, k));
    }
}
