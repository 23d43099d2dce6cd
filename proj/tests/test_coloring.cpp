#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "wstar/calculus.hpp"
#include "wstar/canon.hpp"
#include "wstar/coloring.hpp"

using namespace wstar;

namespace {

Graph cycle(int n) {
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) ids.push_back(std::to_string(i));
    for (int i = 0; i < n; ++i)
        edges.emplace_back(std::to_string(i), std::to_string((i + 1) % n));
    return Graph::from_edges(ids, edges);
}

Graph complete(int n) {
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) ids.push_back(std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(std::to_string(i), std::to_string(j));
    return Graph::from_edges(ids, edges);
}

ListAssignment same_lists(const Graph& g, std::vector<std::string> tokens) {
    ListAssignment L;
    L.lists.assign(g.n(), tokens);
    return L;
}

}  // namespace

TEST_CASE("solve_list_colouring spot cases") {
    Graph k3 = complete(3);
    CHECK_FALSE(solve_list_colouring(k3, same_lists(k3, {"1", "2"})).has_value());
    Graph c4 = cycle(4);
    auto col = solve_list_colouring(c4, same_lists(c4, {"1", "2"}));
    REQUIRE(col.has_value());
    for (auto [u, v] : c4.edge_list()) CHECK((*col)[u] != (*col)[v]);
}

TEST_CASE("cover colouring agrees with list colouring on induced covers") {
    std::mt19937 rng(3);
    for (int n = 1; n <= 5; ++n) {
        for (const auto& g : connected_graphs(n)) {
            for (int trial = 0; trial < 6; ++trial) {
                ListAssignment L;
                L.lists.assign(n, {});
                for (int v = 0; v < n; ++v) {
                    int k = 1 + static_cast<int>(rng() % 3);
                    for (int i = 0; i < k; ++i)
                        L.lists[v].push_back(std::to_string(rng() % 5));
                    std::sort(L.lists[v].begin(), L.lists[v].end());
                    L.lists[v].erase(std::unique(L.lists[v].begin(), L.lists[v].end()),
                                     L.lists[v].end());
                }
                auto direct = solve_list_colouring(g, L);
                auto via_cover = solve_cover_colouring(g, induced_cover(g, L));
                REQUIRE(direct.has_value() == via_cover.has_value());
            }
        }
    }
}

TEST_CASE("empty graph has an empty colouring") {
    Graph e = Graph::from_edges({}, {});
    Cover c;
    CHECK(solve_cover_colouring(e, c).has_value());
}

TEST_CASE("twisted C_4 cover is not colourable") {
    Graph c4 = cycle(4);
    // single node per vertex; identity links on three edges, twist on the last
    Cover cov;
    cov.list_size.assign(4, 1);
    cov.links = {{0, 0, 1, 0}, {1, 0, 2, 0}, {2, 0, 3, 0}, {0, 0, 3, 0}};
    CHECK_FALSE(solve_cover_colouring(c4, cov).has_value());
}

TEST_CASE("choosability spot values") {
    Graph c4 = cycle(4);
    CHECK(is_f_choosable(c4, CapMap::constant(c4, 2)).choosable);
    Graph c3 = complete(3);
    auto r = is_f_choosable(c3, CapMap::constant(c3, 2));
    CHECK_FALSE(r.choosable);
    REQUIRE(r.witness.has_value());
    CHECK_FALSE(solve_list_colouring(c3, *r.witness).has_value());
    for (int v = 0; v < 3; ++v) CHECK(r.witness->lists[v].size() == 2);
}

TEST_CASE("K_{2,4} is not 2-choosable but is 3-choosable") {
    std::vector<std::string> ids{"a1", "a2", "b1", "b2", "b3", "b4"};
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto a : {"a1", "a2"})
        for (auto b : {"b1", "b2", "b3", "b4"}) edges.emplace_back(a, b);
    Graph g = Graph::from_edges(ids, edges);
    auto r2 = is_f_choosable(g, CapMap::constant(g, 2));
    CHECK_FALSE(r2.choosable);
    CHECK_FALSE(solve_list_colouring(g, *r2.witness).has_value());
    CHECK(is_f_choosable(g, CapMap::constant(g, 3)).choosable);
}

TEST_CASE("DP colourability spot values") {
    Graph c4 = cycle(4);
    auto r = is_dp_f_colourable(c4, CapMap::constant(c4, 2));
    CHECK_FALSE(r.colourable);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->is_simple(c4));
    CHECK_FALSE(solve_cover_colouring(c4, *r.witness).has_value());

    Graph c5 = cycle(5);
    CHECK(is_dp_f_colourable(c5, CapMap::constant(c5, 3)).colourable);
    Graph k1 = Graph::from_edges({"v"}, {});
    CHECK(is_dp_f_colourable(k1, CapMap::constant(k1, 1)).colourable);
}

TEST_CASE("paintability spot values") {
    Graph c4 = cycle(4);
    CHECK(decide_paintable(c4, CapMap::constant(c4, 2)));
    CHECK_FALSE(decide_dp_paintable(c4, CapMap::constant(c4, 2)));
    Graph k1 = Graph::from_edges({"v"}, {});
    CHECK(decide_dp_paintable(k1, CapMap::constant(k1, 1)));
    Graph k3 = complete(3);
    CHECK_FALSE(decide_paintable(k3, CapMap::constant(k3, 2)));
    CHECK(decide_paintable(k3, CapMap::constant(k3, 3)));
}

TEST_CASE("parameters") {
    std::vector<std::string> ids{"a1", "a2", "b1", "b2", "b3", "b4"};
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto a : {"a1", "a2"})
        for (auto b : {"b1", "b2", "b3", "b4"}) edges.emplace_back(a, b);
    Graph k24 = Graph::from_edges(ids, edges);
    CHECK(parameter(k24, ColouringParameter::Choice) == 3);
    Graph c5 = cycle(5);
    CHECK(parameter(c5, ColouringParameter::DpPaint) == 3);
    Graph k1 = Graph::from_edges({"v"}, {});
    CHECK(parameter(k1, ColouringParameter::Choice) == 1);
}

TEST_CASE("chain ch <= paint <= dp-paint and dp <= dp-paint on n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& g : connected_graphs(n)) {
            int ch = parameter(g, ColouringParameter::Choice);
            int dp = parameter(g, ColouringParameter::DpChromatic);
            int paint = parameter(g, ColouringParameter::Paint);
            int dpp = parameter(g, ColouringParameter::DpPaint);
            REQUIRE(ch <= paint);
            REQUIRE(paint <= dpp);
            REQUIRE(dp <= dpp);
        }
    }
}

TEST_CASE("degree-choosable iff not a Gallai tree, n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& g : connected_graphs(n)) {
            auto r = is_f_choosable(g, CapMap::degrees(g));
            REQUIRE(r.choosable == !is_gallai_tree(g));
        }
    }
}

TEST_CASE("DP-degree-colourable iff not a GDP tree, n <= 4") {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& g : connected_graphs(n)) {
            auto r = is_dp_f_colourable(g, CapMap::degrees(g));
            REQUIRE(r.colourable == !is_gdp_tree(g));
        }
    }
}

TEST_CASE("lists and cover JSON round trips") {
    Graph c4 = cycle(4);
    auto L = same_lists(c4, {"1", "2"});
    auto L2 = lists_from_json(c4, lists_to_json(c4, L));
    CHECK(L2.lists == L.lists);
    auto cov = induced_cover(c4, L);
    auto cov2 = cover_from_json(c4, cover_to_json(c4, cov));
    CHECK(cov2.list_size == cov.list_size);
    CHECK(cov2.links.size() == cov.links.size());
}
