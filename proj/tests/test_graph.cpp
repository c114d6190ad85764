#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "antiramsey/chromatic.hpp"
#include "antiramsey/graph.hpp"
#include "antiramsey/graph6.hpp"
#include "antiramsey/isomorphism.hpp"

using namespace antiramsey;

TEST_CASE("standard constructors") {
    Graph m4 = matching(4);
    CHECK(m4.n() == 4);
    CHECK(m4.edge_count() == 2);
    CHECK(matching(5).edge_count() == 2);
    CHECK(matching(5).n() == 5);

    CHECK(star(1).n() == 1);
    CHECK(star(1).edge_count() == 0);
    CHECK(star(4).edge_count() == 3);

    CHECK(complete_multipartite({2, 2, 2}).edge_count() == 12);
    CHECK(path(4).edge_count() == 3);
    CHECK(cycle(5).edge_count() == 5);
    CHECK(cycle(2).edge_count() == 0);
}

TEST_CASE("turan graphs") {
    CHECK(are_isomorphic(turan(4, 2), cycle(4)));
    CHECK(turan(5, 5) == complete(5));
    CHECK(turan(9, 3).edge_count() == 27);
    CHECK_THROWS_AS(turan(4, 0), std::invalid_argument);

    for (int n = 0; n <= 20; ++n)
        for (int p = 1; p <= 5; ++p)
            CHECK(turan(n, p).edge_count() == turan_count(n, p));
}

TEST_CASE("join, union, complement, copies") {
    CHECK(join(complete(1), cycle(4)).edge_count() == 8);
    CHECK(complement(complete(5)).edge_count() == 0);
    Graph two_k3 = copies(2, complete(3));
    CHECK(two_k3.n() == 6);
    CHECK(two_k3.edge_count() == 6);
    CHECK(are_isomorphic(complement(complement(two_k3)), two_k3));
    CHECK(disjoint_union(complete(3), complete(2)).edge_count() == 4);
}

TEST_CASE("fans, petersen, q-graph") {
    Graph bowtie = fan(2);
    CHECK(bowtie.n() == 5);
    CHECK(bowtie.edge_count() == 6);
    CHECK(are_isomorphic(fan(2), general_fan(2, 2)));
    CHECK(general_fan(2, 3).n() == 7);

    Graph pet = petersen();
    CHECK(pet.n() == 10);
    CHECK(pet.edge_count() == 15);
    for (int d : pet.degrees()) CHECK(d == 3);
    CHECK_FALSE(contains_subgraph(complete(3), pet));
    CHECK_FALSE(contains_subgraph(cycle(4), pet));  // girth 5

    Graph q22 = q_graph(2, 2);
    CHECK(q22.n() == 5);
    CHECK(q22.edge_count() == 8);
    CHECK(are_isomorphic(q22, join(complete(1), turan(4, 2))));
}

TEST_CASE("edge count formulas") {
    CHECK(turan_count(5, 2) == 6);
    for (int n = 1; n <= 14; ++n)
        for (int p = 1; p <= 4; ++p) CHECK(h_count(n, p, 1) == turan_count(n, p));
    CHECK(h_prime_count(10, 2, 3) == 32);

    for (int p = 2; p <= 3; ++p)
        for (int k = 1; k <= 5; ++k)
            for (int n = k; n <= 16; ++n) {
                CHECK(join(complete(k - 1), turan(n - k + 1, p)).edge_count() == h_count(n, p, k));
                CHECK(Graph(join(Graph(k - 1, {}), turan(n - k + 1, p))).edge_count() ==
                      h_prime_count(n, p, k));
            }
}

TEST_CASE("simonovits bound") {
    CHECK(simonovits_bound(4, 2, {2, 2}) == 4);
    CHECK(simonovits_bound(4, 2, {4, 0}) == 2);
    CHECK(simonovits_bound(5, 2, {3, 2}) == 6);
    CHECK_THROWS_AS(simonovits_bound(5, 2, {3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(simonovits_bound(5, 3, {3, 2}), std::invalid_argument);

    // every complete p-partite graph obeys the bound
    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        int p = 2 + rng() % 3;
        int n = p + rng() % 26;
        std::vector<int> sizes(p, 0);
        for (int i = 0; i < n; ++i) ++sizes[rng() % p];
        long long edges = binom2(n);
        for (int s : sizes) edges -= binom2(s);
        CHECK(edges <= simonovits_bound(n, p, sizes));
    }
}

TEST_CASE("delete_edges") {
    CHECK(delete_edges(complete(5), {{0, 1}}).edge_count() == 9);
    Graph g = fan(2);
    CHECK(delete_edges(g, {}) == g);
    Graph bare = delete_edges(complete(3), {{0, 1}, {0, 2}, {1, 2}});
    CHECK(bare.n() == 3);
    CHECK(bare.edge_count() == 0);
    CHECK_THROWS_AS(delete_edges(matching(4), {{0, 2}}), std::invalid_argument);
}

TEST_CASE("chromatic number") {
    CHECK(chromatic_number(cycle(5)) == 3);
    CHECK(chromatic_number(cycle(9)) == 3);
    CHECK(chromatic_number(complete(5)) == 5);
    CHECK(chromatic_number(petersen()) == 3);
    CHECK(chromatic_number(Graph(0, {})) == 0);
    CHECK(chromatic_number(Graph(4, {})) == 1);
    for (int n = 1; n <= 18; ++n)
        for (int p = 1; p <= 5; ++p)
            CHECK(chromatic_number(turan(n, p)) == std::min(p, n));
    CHECK_FALSE(is_k_colorable(petersen(), 2));
    CHECK(is_k_colorable(petersen(), 3));
}

TEST_CASE("graph6 round trip") {
    CHECK(to_graph6(complete(3)) == "Bw");
    CHECK(to_graph6(complete(5)) == "D~{");
    CHECK(from_graph6("Bw") == complete(3));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = rng() % 63;
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) es.emplace_back(u, v);
        Graph g(n, es);
        CHECK(from_graph6(to_graph6(g)) == g);
    }

    std::stringstream ss;
    write_graph6_lines(ss, {complete(3), petersen(), Graph(0, {})});
    auto back = read_graph6_lines(ss);
    REQUIRE(back.size() == 3);
    CHECK(back[0] == complete(3));
    CHECK(back[1] == petersen());
    CHECK(back[2].n() == 0);
}
