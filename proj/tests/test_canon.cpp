#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "wstar/canon.hpp"

using namespace wstar;

TEST_CASE("canonical form invariant under relabelling") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        SmallGraph g;
        g.n = n;
        g.adj.assign(n, 0);
        std::vector<std::int64_t> colours(n);
        for (int u = 0; u < n; ++u) {
            colours[u] = rng() % 3;
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        }
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        SmallGraph h;
        h.n = n;
        h.adj.assign(n, 0);
        std::vector<std::int64_t> hc(n);
        for (int u = 0; u < n; ++u) {
            hc[perm[u]] = colours[u];
            for (int v = u + 1; v < n; ++v)
                if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
        }
        REQUIRE(canonical_form(g, colours).certificate == canonical_form(h, hc).certificate);
    }
}

TEST_CASE("canonical form distinguishes colourings") {
    SmallGraph p3;
    p3.n = 3;
    p3.adj.assign(3, 0);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    CHECK(canonical_form(p3, {1, 2, 1}).certificate != canonical_form(p3, {2, 1, 1}).certificate);
    CHECK(canonical_form(p3, {1, 2, 3}).certificate == canonical_form(p3, {3, 2, 1}).certificate);
}

TEST_CASE("connected graph counts match the literature") {
    CHECK(connected_graphs(1).size() == 1);
    CHECK(connected_graphs(2).size() == 1);
    CHECK(connected_graphs(3).size() == 2);
    CHECK(connected_graphs(4).size() == 6);
    CHECK(connected_graphs(5).size() == 21);
    CHECK(connected_graphs(6).size() == 112);
}

TEST_CASE("graphs by edge count match the literature") {
    CHECK(graphs_with_edges(1).size() == 1);
    CHECK(graphs_with_edges(2).size() == 2);
    CHECK(graphs_with_edges(3).size() == 5);
    CHECK(graphs_with_edges(4).size() == 11);
    CHECK(graphs_with_edges(5).size() == 26);
    CHECK(graphs_with_edges(6).size() == 68);
}
