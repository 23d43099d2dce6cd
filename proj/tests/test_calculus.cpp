#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "wstar/calculus.hpp"
#include "wstar/canon.hpp"

using namespace wstar;

namespace {

Graph from_edges(std::vector<std::string> ids,
                 std::vector<std::pair<std::string, std::string>> edges) {
    return Graph::from_edges(std::move(ids), edges);
}

Graph cycle(int n) {
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) ids.push_back(std::to_string(i));
    for (int i = 0; i < n; ++i)
        edges.emplace_back(std::to_string(i), std::to_string((i + 1) % n));
    return from_edges(ids, edges);
}

Graph complete(int n) {
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) ids.push_back(std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(std::to_string(i), std::to_string(j));
    return from_edges(ids, edges);
}

CapMap caps(const Graph& g, std::vector<std::int64_t> v) {
    CapMap f;
    f.values = std::move(v);
    f.check_domain(g);
    return f;
}

}  // namespace

TEST_CASE("apply_op follows the operation semantics") {
    Graph k2 = from_edges({"x", "y"}, {{"x", "y"}});
    OpState st{k2, caps(k2, {5, 2})};
    auto st2 = apply_op(st, Operation::edge_delete("x", "y"));
    CHECK(st2.graph.m() == 0);
    CHECK(st2.graph.n() == 2);
    CHECK(st2.caps[st2.graph.index_of("x")] == 3);
    CHECK(st2.caps[st2.graph.index_of("y")] == 2);

    Graph k1 = from_edges({"v"}, {});
    auto st3 = apply_op(OpState{k1, caps(k1, {1})}, Operation::vertex_delete("v"));
    CHECK(st3.graph.n() == 0);

    Graph p3 = from_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    auto st4 = apply_op(OpState{p3, caps(p3, {2, 1, 2})}, Operation::vertex_delete("b"));
    CHECK(st4.graph.n() == 2);
    CHECK(st4.graph.m() == 0);
    CHECK(st4.caps[st4.graph.index_of("a")] == 1);
    CHECK(st4.caps[st4.graph.index_of("c")] == 1);
}

TEST_CASE("apply_op errors") {
    Graph k2 = from_edges({"x", "y"}, {{"x", "y"}});
    OpState st{k2, caps(k2, {2, 2})};
    CHECK_THROWS_AS(apply_op(st, Operation::edge_delete("x", "y")), op_error);
    CHECK_THROWS_AS(apply_op(st, Operation::vertex_delete("z")), op_error);
    CHECK_THROWS_AS(apply_op(st, Operation::reduce("x", 2)), op_error);
    Graph e2 = from_edges({"x", "y"}, {});
    CHECK_THROWS_AS(apply_op(OpState{e2, caps(e2, {2, 2})}, Operation::edge_delete("x", "y")),
                    op_error);
}

TEST_CASE("verify_certificate accepts a legal replay and pinpoints failures") {
    Graph p3 = from_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CapMap f = caps(p3, {2, 1, 2});
    auto cert = make_certificate(p3, f,
                                 {Operation::vertex_delete("b"), Operation::vertex_delete("a"),
                                  Operation::vertex_delete("c")});
    CHECK(verify_certificate(p3, f, cert).accepted);

    Graph k3 = complete(3);
    CapMap f3 = CapMap::constant(k3, 2);
    auto bad = make_certificate(k3, f3,
                                {Operation::vertex_delete("0"), Operation::vertex_delete("1"),
                                 Operation::vertex_delete("2")});
    auto res = verify_certificate(k3, f3, bad);
    CHECK_FALSE(res.accepted);
    CHECK(res.reject->step == 3);

    Graph k2 = from_edges({"x", "y"}, {{"x", "y"}});
    CapMap f2 = caps(k2, {2, 2});
    auto bad2 = make_certificate(k2, f2, {Operation::edge_delete("x", "y")});
    auto res2 = verify_certificate(k2, f2, bad2, VerifyMode::Prefix);
    CHECK_FALSE(res2.accepted);
    CHECK(res2.reject->step == 1);

    // prefix mode accepts a partial but legal replay
    auto part = make_certificate(p3, f, {Operation::vertex_delete("b")});
    CHECK(verify_certificate(p3, f, part, VerifyMode::Prefix).accepted);
    CHECK_FALSE(verify_certificate(p3, f, part, VerifyMode::Full).accepted);
}

TEST_CASE("decide_weak_star spot values") {
    Graph empty = from_edges({}, {});
    auto r0 = decide_weak_star(empty, CapMap::constant(empty, 1));
    REQUIRE(is_yes(r0));
    CHECK(std::get<DecideYes>(r0).cert.ops.empty());

    Graph k3 = complete(3);
    CHECK(is_no(decide_weak_star(k3, CapMap::constant(k3, 2))));
    CHECK(is_yes(decide_weak_star(k3, CapMap::constant(k3, 3))));
}

TEST_CASE("weak star degeneracy values") {
    for (int n = 1; n <= 4; ++n) {
        auto r = weak_star_degeneracy(complete(n));
        REQUIRE(r.value.has_value());
        CHECK(*r.value == n);
    }
    CHECK(*weak_star_degeneracy(cycle(4)).value == 3);
    CHECK(*weak_star_degeneracy(cycle(5)).value == 3);
}

TEST_CASE("strict weak decisions") {
    Graph k3 = complete(3);
    CHECK(is_yes(decide_strict_weak(k3, CapMap::constant(k3, 3))));
    CHECK(is_no(decide_strict_weak(k3, CapMap::constant(k3, 2))));
    Graph c4 = cycle(4);
    CHECK(is_no(decide_strict_weak(c4, CapMap::constant(c4, 2))));
}

TEST_CASE("strict degeneracy") {
    for (int n = 2; n <= 5; ++n)
        CHECK(decide_strict_degenerate(complete(n), CapMap::constant(complete(n), n)).has_value());
    Graph c4 = cycle(4);
    CHECK_FALSE(decide_strict_degenerate(c4, CapMap::constant(c4, 2)).has_value());
    Graph p3 = from_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK_FALSE(decide_strict_degenerate(p3, caps(p3, {1, 2, 1})).has_value());
    // the witness ordering orients edges from later to earlier removal with
    // in-degree < f
    Graph k4 = complete(4);
    auto ord = decide_strict_degenerate(k4, CapMap::constant(k4, 4));
    REQUIRE(ord.has_value());
    std::vector<int> pos(4);
    for (int i = 0; i < 4; ++i) pos[(*ord)[i]] = i;
    for (int v = 0; v < 4; ++v) {
        int indeg = 0;
        for (int w : k4.neighbors(v))
            if (pos[w] > pos[v]) ++indeg;
        CHECK(indeg < 4);
    }
}

TEST_CASE("hierarchy strict => strict-weak => weak* exhaustively up to n = 4") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& g : connected_graphs(n)) {
            std::vector<std::int64_t> f(n, 1);
            for (;;) {
                CapMap fm;
                fm.values = f;
                bool strict = decide_strict_degenerate(g, fm).has_value();
                auto sw = decide_strict_weak(g, fm);
                auto ws = decide_weak_star(g, fm);
                REQUIRE_FALSE(is_unknown(sw));
                REQUIRE_FALSE(is_unknown(ws));
                if (strict) REQUIRE(is_yes(sw));
                if (is_yes(sw)) REQUIRE(is_yes(ws));
                // positivity comes with the territory: f >= 1 everywhere here
                int i = 0;
                while (i < n && f[i] == n) f[i++] = 1;
                if (i == n) break;
                ++f[i];
            }
        }
    }
}

TEST_CASE("weak* monotone in caps, n <= 4 exhaustive") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& g : connected_graphs(n)) {
            std::vector<std::int64_t> f(n, 1);
            for (;;) {
                CapMap fm;
                fm.values = f;
                if (is_yes(decide_weak_star(g, fm))) {
                    for (int v = 0; v < n; ++v) {
                        CapMap up = fm;
                        up[v] += 1;
                        REQUIRE(is_yes(decide_weak_star(g, up)));
                    }
                }
                int i = 0;
                while (i < n && f[i] == 4) f[i++] = 1;
                if (i == n) break;
                ++f[i];
            }
        }
    }
}

TEST_CASE("fused-reduce search agrees with the unrestricted search, n <= 4") {
    SearchOptions fused = default_search_options();
    SearchOptions raw = fused;
    raw.fused_reduce = false;
    for (int n = 1; n <= 4; ++n) {
        for (const auto& g : connected_graphs(n)) {
            std::vector<std::int64_t> f(n, 1);
            for (;;) {
                CapMap fm;
                fm.values = f;
                REQUIRE(is_yes(decide_weak_star(g, fm, fused)) ==
                        is_yes(decide_weak_star(g, fm, raw)));
                int i = 0;
                while (i < n && f[i] == 4) f[i++] = 1;
                if (i == n) break;
                ++f[i];
            }
        }
    }
}

TEST_CASE("budget exhaustion reports unknown, not no") {
    SearchOptions opt;
    opt.node_budget = 1;
    Graph k4 = complete(4);
    auto r = decide_weak_star(k4, CapMap::constant(k4, 3), opt);
    CHECK(is_unknown(r));
}

TEST_CASE("certificate jsonl round trip") {
    Graph k3 = complete(3);
    CapMap f = CapMap::constant(k3, 3);
    auto res = decide_weak_star(k3, f);
    REQUIRE(is_yes(res));
    auto cert = std::get<DecideYes>(res).cert;
    auto text = certificate_to_jsonl(k3, cert);
    auto back = certificate_from_jsonl(k3, text);
    CHECK(back.initial_graph6 == cert.initial_graph6);
    CHECK(back.initial_caps.values == cert.initial_caps.values);
    CHECK(back.ops == cert.ops);
}

TEST_CASE("normalize drops cosmetic reduces and keeps normal certificates") {
    Graph p3 = from_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CapMap f = caps(p3, {2, 3, 3});
    // cosmetic reduce on c: never referenced by an EdgeDelete
    auto cert = make_certificate(
        p3, f,
        {Operation::reduce("c", 1), Operation::vertex_delete("a"), Operation::vertex_delete("b"),
         Operation::vertex_delete("c")});
    auto norm = normalize_certificate(p3, f, cert);
    CHECK(norm.ops.size() == 3);
    for (const auto& op : norm.ops) CHECK(op.kind == OpKind::VertexDelete);

    // already normal: reduce immediately before the edge delete it serves
    CapMap f2 = caps(p3, {2, 3, 2});
    auto cert2 = make_certificate(
        p3, f2,
        {Operation::reduce("a", 1), Operation::edge_delete("b", "a"),
         Operation::vertex_delete("a"), Operation::vertex_delete("b"),
         Operation::vertex_delete("c")});
    auto norm2 = normalize_certificate(p3, f2, cert2);
    CHECK(norm2.ops == cert2.ops);
}

TEST_CASE("normalized random certificates still verify") {
    std::mt19937 rng(11);
    int done = 0;
    for (int n = 2; n <= 5 && done < 60; ++n) {
        for (const auto& g : connected_graphs(n)) {
            std::vector<std::int64_t> f(n);
            for (auto& x : f) x = 1 + rng() % n;
            CapMap fm;
            fm.values = f;
            auto r = decide_weak_star(g, fm);
            if (!is_yes(r)) continue;
            auto cert = std::get<DecideYes>(r).cert;
            auto norm = normalize_certificate(g, fm, cert);
            REQUIRE(verify_certificate(g, fm, norm).accepted);
            ++done;
        }
    }
    CHECK(done > 10);
}
