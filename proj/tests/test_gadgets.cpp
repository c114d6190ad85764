#include <catch2/catch_amalgamated.hpp>

#include "antiramsey/gadgets.hpp"
#include "antiramsey/graph.hpp"
#include "antiramsey/isomorphism.hpp"

using namespace antiramsey;

namespace {

void check_degrees(const Graph& g, int d) {
    auto deg = g.degrees();
    int short_count = 0;
    for (int x : deg) {
        if (x == d - 1)
            ++short_count;
        else
            CHECK(x == d);
    }
    if ((g.n() * d) % 2 == 0)
        CHECK(short_count == 0);
    else
        CHECK(short_count == 1);
}

}  // namespace

TEST_CASE("regular_triangle_free pinned cases") {
    CHECK(are_isomorphic(regular_triangle_free(5, 2), cycle(5)));

    Graph g63 = regular_triangle_free(6, 3);
    check_degrees(g63, 3);
    CHECK_FALSE(contains_triangle(g63));
    CHECK(are_isomorphic(g63, complete_multipartite({3, 3})));

    Graph g73 = regular_triangle_free(7, 3);  // 7*3 odd: one vertex of degree 2
    check_degrees(g73, 3);
    CHECK_FALSE(contains_triangle(g73));
}

TEST_CASE("regular_triangle_free over a grid") {
    for (int d = 0; d <= 4; ++d)
        for (int m = std::max(1, 2 * d); m <= 14; ++m) {
            if (d == 2 && m < 4) continue;
            if (d == 4 && m == 9) {
                // triangle-free with min degree > 2m/5 would be bipartite,
                // impossible on an odd vertex count
                CHECK_THROWS_AS(regular_triangle_free(m, d), std::invalid_argument);
                continue;
            }
            Graph g = regular_triangle_free(m, d);
            check_degrees(g, d);
            CHECK_FALSE(contains_triangle(g));
            CHECK(g == regular_triangle_free(m, d));  // deterministic
        }
}

TEST_CASE("regular_triangle_free infeasible inputs") {
    CHECK_THROWS_AS(regular_triangle_free(5, 3), std::invalid_argument);  // m < 2d
    CHECK_THROWS_AS(regular_triangle_free(3, 2), std::invalid_argument);  // forces a triangle
    CHECK_THROWS_AS(regular_triangle_free(4, 4), std::invalid_argument);  // d >= m
}

TEST_CASE("triangles permitted in the U class") {
    Graph c3 = regular_graph(3, 2, /*allow_triangles=*/true);
    CHECK(are_isomorphic(c3, complete(3)));
    Graph c5 = regular_graph(5, 2, true);
    CHECK(are_isomorphic(c5, cycle(5)));
}
