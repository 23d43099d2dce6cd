#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wstar/calculus.hpp"
#include "wstar/canon.hpp"

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

}  // namespace

TEST_CASE("split with g = f keeps everything on the X side") {
    Graph c4 = cycle(4);
    CapMap f = CapMap::constant(c4, 3);
    auto cert = std::get<DecideYes>(decide_weak_star(c4, f)).cert;
    auto split = certificate_split(c4, f, f, cert);
    CHECK(split.x_vertices.size() == 4);
    CHECK(split.cert_rest.ops.empty());
    CHECK(split.cert_x.ops == cert.ops);
}

TEST_CASE("split with g = 0 keeps everything on the rest side") {
    Graph c4 = cycle(4);
    CapMap f = CapMap::constant(c4, 3);
    auto cert = std::get<DecideYes>(decide_weak_star(c4, f)).cert;
    auto split = certificate_split(c4, f, CapMap::constant(c4, 0), cert);
    CHECK(split.x_vertices.empty());
    CHECK(split.cert_x.ops.empty());
}

TEST_CASE("split of C_4 at f = 3, g = 1 verifies on both sides") {
    Graph c4 = cycle(4);
    CapMap f = CapMap::constant(c4, 3);
    auto cert = std::get<DecideYes>(decide_weak_star(c4, f)).cert;
    // certificate_split verifies both outputs internally and throws otherwise
    auto split = certificate_split(c4, f, CapMap::constant(c4, 1), cert);
    CHECK(split.x_vertices.size() <= 4);
}

TEST_CASE("split after an explicit edge-delete-first certificate") {
    // regression for the case where the vertex paying an EdgeDelete must be
    // steered into X: K_2 with f=(2,1), g=(1,0)
    Graph k2 = Graph::from_edges({"x", "y"}, {{"x", "y"}});
    CapMap f;
    f.values = {2, 1};
    CapMap g;
    g.values = {1, 0};
    auto cert = make_certificate(
        k2, f,
        {Operation::edge_delete("x", "y"), Operation::vertex_delete("x"),
         Operation::vertex_delete("y")});
    REQUIRE(verify_certificate(k2, f, cert).accepted);
    auto split = certificate_split(k2, f, g, cert);
    REQUIRE(split.x_vertices.size() == 1);
    CHECK(k2.id(split.x_vertices[0]) == "x");
}

TEST_CASE("split precondition violations throw") {
    Graph c4 = cycle(4);
    CapMap f = CapMap::constant(c4, 3);
    auto cert = std::get<DecideYes>(decide_weak_star(c4, f)).cert;
    CHECK_THROWS_AS(certificate_split(c4, f, CapMap::constant(c4, 4), cert), op_error);
    auto broken = cert;
    broken.ops.pop_back();
    CHECK_THROWS_AS(certificate_split(c4, f, CapMap::constant(c4, 1), broken), op_error);
}

TEST_CASE("splits verify for all connected graphs n <= 4 and all g <= f <= 3") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& gr : connected_graphs(n)) {
            std::vector<std::int64_t> f(n, 1);
            for (;;) {
                CapMap fm;
                fm.values = f;
                auto r = decide_weak_star(gr, fm);
                if (is_yes(r)) {
                    const auto& cert = std::get<DecideYes>(r).cert;
                    std::vector<std::int64_t> gv(n, 0);
                    for (;;) {
                        CapMap gm;
                        gm.values = gv;
                        // throws if either side fails to verify
                        certificate_split(gr, fm, gm, cert);
                        int i = 0;
                        while (i < n && gv[i] == f[i]) gv[i++] = 0;
                        if (i == n) break;
                        ++gv[i];
                    }
                }
                int i = 0;
                while (i < n && f[i] == 3) f[i++] = 1;
                if (i == n) break;
                ++f[i];
            }
        }
    }
}

TEST_CASE("splits verify on strict-weak certificates (DeleteSave expansion)") {
    Graph c5 = cycle(5);
    CapMap f = CapMap::constant(c5, 3);
    auto r = decide_strict_weak(c5, f);
    REQUIRE(is_yes(r));
    auto cert = std::get<DecideYes>(r).cert;
    CapMap g = CapMap::constant(c5, 2);
    certificate_split(c5, f, g, cert);
}
