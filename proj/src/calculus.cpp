#include "wstar/calculus.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <span>
#include <sstream>

#include "json.hpp"
#include "wstar/canon.hpp"

namespace wstar {

Certificate make_certificate(const Graph& g, const CapMap& f, std::vector<Operation> ops) {
    f.check_domain(g);
    return Certificate{to_graph6(g), f, std::move(ops)};
}

namespace {

nlohmann::json op_to_json(const Operation& op) {
    nlohmann::json j;
    switch (op.kind) {
        case OpKind::ReduceValue:
            j["op"] = "reduce";
            j["x"] = op.x;
            j["s"] = op.s;
            break;
        case OpKind::EdgeDelete:
            j["op"] = "edgedel";
            j["x"] = op.x;
            j["y"] = op.y;
            break;
        case OpKind::VertexDelete:
            j["op"] = "vdel";
            j["x"] = op.x;
            break;
        case OpKind::DeleteSave:
            j["op"] = "deletesave";
            j["x"] = op.x;
            j["y"] = op.y;
            break;
    }
    return j;
}

Operation op_from_json(const nlohmann::json& j) {
    std::string kind = j.at("op").get<std::string>();
    if (kind == "reduce")
        return Operation::reduce(j.at("x").get<std::string>(), j.at("s").get<std::int64_t>());
    if (kind == "edgedel")
        return Operation::edge_delete(j.at("x").get<std::string>(), j.at("y").get<std::string>());
    if (kind == "vdel") return Operation::vertex_delete(j.at("x").get<std::string>());
    if (kind == "deletesave")
        return Operation::delete_save(j.at("x").get<std::string>(), j.at("y").get<std::string>());
    throw op_error("unknown op name: " + kind);
}

}  // namespace

std::string certificate_to_jsonl(const Graph& g, const Certificate& cert) {
    std::ostringstream out;
    nlohmann::json head;
    head["graph"] = cert.initial_graph6;
    nlohmann::json caps = nlohmann::json::object();
    for (int v = 0; v < g.n(); ++v) caps[g.id(v)] = cert.initial_caps[v];
    head["caps"] = caps;
    out << head.dump() << "\n";
    for (const auto& op : cert.ops) out << op_to_json(op).dump() << "\n";
    return out.str();
}

Certificate certificate_from_jsonl(const Graph& g, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw op_error("empty certificate");
    nlohmann::json head = nlohmann::json::parse(line);
    Certificate cert;
    cert.initial_graph6 = head.at("graph").get<std::string>();
    cert.initial_caps.values.assign(g.n(), 0);
    const auto& caps = head.at("caps");
    for (auto it = caps.begin(); it != caps.end(); ++it) {
        int v = g.index_of(it.key());
        if (v < 0) throw op_error("certificate caps reference unknown vertex " + it.key());
        cert.initial_caps[v] = it.value().get<std::int64_t>();
    }
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        cert.ops.push_back(op_from_json(nlohmann::json::parse(line)));
    }
    return cert;
}

// --- replay ---

CertBuilder::CertBuilder(const Graph& g, CapMap f) : g_(g), caps_(std::move(f.values)) {
    if (static_cast<int>(caps_.size()) != g.n())
        throw op_error("cap map domain does not match vertex set");
    alive_.assign(g.n(), true);
    live_count_ = g.n();
}

bool CertBuilder::done() const { return live_count_ == 0; }

bool CertBuilder::edge_alive(int u, int v) const {
    if (!alive_[u] || !alive_[v] || !g_.has_edge(u, v)) return false;
    return !removed_edges_.count(std::minmax(u, v));
}

std::vector<int> CertBuilder::live_neighbors(int v) const {
    std::vector<int> out;
    for (int w : g_.neighbors(v))
        if (edge_alive(v, w)) out.push_back(w);
    return out;
}

int CertBuilder::live_degree(int v) const { return static_cast<int>(live_neighbors(v).size()); }

void CertBuilder::apply(const Operation& op) {
    auto idx = [&](const std::string& id) {
        int v = g_.index_of(id);
        if (v < 0) throw op_error("unknown vertex " + id);
        if (!alive_[v]) throw op_error("vertex already deleted: " + id);
        return v;
    };
    switch (op.kind) {
        case OpKind::ReduceValue: {
            int x = idx(op.x);
            if (op.s < 1) throw op_error("ReduceValue needs s >= 1");
            if (!(caps_[x] > op.s))
                throw op_error("illegal ReduceValue: f(" + op.x + ") <= s");
            caps_[x] -= op.s;
            break;
        }
        case OpKind::EdgeDelete: {
            int x = idx(op.x), y = idx(op.y);
            if (!edge_alive(x, y)) throw op_error("missing edge " + op.x + "-" + op.y);
            if (!(caps_[x] > caps_[y]))
                throw op_error("illegal EdgeDelete: f(" + op.x + ") <= f(" + op.y + ")");
            caps_[x] -= caps_[y];
            removed_edges_.insert(std::minmax(x, y));
            break;
        }
        case OpKind::VertexDelete: {
            int x = idx(op.x);
            if (!(caps_[x] > 0)) throw op_error("illegal VertexDelete: f(" + op.x + ") = 0");
            for (int w : live_neighbors(x)) {
                if (caps_[w] < 1)
                    throw op_error("illegal VertexDelete: neighbour " + g_.id(w) +
                                   " has no capacity left");
            }
            for (int w : live_neighbors(x)) caps_[w] -= 1;
            alive_[x] = false;
            --live_count_;
            break;
        }
        case OpKind::DeleteSave: {
            int x = idx(op.x), y = idx(op.y);
            if (!edge_alive(x, y)) throw op_error("missing edge " + op.x + "-" + op.y);
            if (!(caps_[x] > caps_[y]))
                throw op_error("illegal DeleteSave: f(" + op.x + ") <= f(" + op.y + ")");
            for (int w : live_neighbors(x)) {
                if (w != y && caps_[w] < 1)
                    throw op_error("illegal DeleteSave: neighbour " + g_.id(w) +
                                   " has no capacity left");
            }
            for (int w : live_neighbors(x))
                if (w != y) caps_[w] -= 1;
            alive_[x] = false;
            --live_count_;
            break;
        }
    }
    ops_.push_back(op);
}

OpState apply_op(const OpState& state, const Operation& op) {
    state.caps.check_domain(state.graph);
    CertBuilder b(state.graph, state.caps);
    b.apply(op);
    OpState out;
    std::vector<int> kept;
    for (int v = 0; v < state.graph.n(); ++v)
        if (b.alive(v)) kept.push_back(v);
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int v : kept) ids.push_back(state.graph.id(v));
    for (auto [u, v] : state.graph.edge_list())
        if (b.edge_alive(u, v)) edges.emplace_back(state.graph.id(u), state.graph.id(v));
    out.graph = Graph::from_edges(ids, edges);
    out.caps.values.resize(out.graph.n());
    for (int v = 0; v < out.graph.n(); ++v)
        out.caps[v] = b.cap(state.graph.index_of(out.graph.id(v)));
    return out;
}

VerifyResult verify_certificate(const Graph& g, const CapMap& f, const Certificate& cert,
                                VerifyMode mode) {
    if (cert.initial_graph6 != to_graph6(g))
        throw op_error("certificate initial graph does not match");
    if (cert.initial_caps.values != f.values)
        throw op_error("certificate initial caps do not match");
    CertBuilder b(g, f);
    for (std::size_t i = 0; i < cert.ops.size(); ++i) {
        try {
            b.apply(cert.ops[i]);
        } catch (const op_error& e) {
            return {false, Reject{static_cast<int>(i) + 1, e.what()}};
        }
    }
    if (mode == VerifyMode::Full && !b.done())
        return {false,
                Reject{static_cast<int>(cert.ops.size()) + 1, "final state is not empty"}};
    return {true, std::nullopt};
}

// --- searches ---

SearchOptions default_search_options() {
    SearchOptions opt;
    if (const char* env = std::getenv("WEAKSTAR_BUDGET")) {
        char* end = nullptr;
        auto v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) opt.node_budget = v;
    }
    return opt;
}

namespace {

struct budget_exhausted {};

// mutable search image of (G,f); vertices are indices of the original graph
struct SearchState {
    SmallGraph g;                       // adjacency over all original indices
    std::uint64_t alive = 0;
    std::vector<std::int64_t> caps;

    int live_degree(int v) const { return __builtin_popcountll(g.adj[v] & alive); }
};

std::string pair_key(const SearchState& st, bool canonical) {
    // compact the alive subgraph
    std::vector<int> verts;
    for (int v = 0; v < st.g.n; ++v)
        if ((st.alive >> v) & 1) verts.push_back(v);
    SmallGraph sub;
    sub.n = static_cast<int>(verts.size());
    sub.adj.assign(sub.n, 0);
    std::vector<std::int64_t> caps(sub.n);
    for (int i = 0; i < sub.n; ++i) {
        caps[i] = st.caps[verts[i]];
        for (int j = i + 1; j < sub.n; ++j)
            if (st.g.has_edge(verts[i], verts[j])) sub.add_edge(i, j);
    }
    if (canonical) return canonical_form(sub, caps).certificate;
    std::string key;
    for (int i = 0; i < sub.n; ++i) {
        key.append(reinterpret_cast<const char*>(&caps[i]), sizeof(caps[i]));
        key.append(reinterpret_cast<const char*>(&sub.adj[i]), sizeof(sub.adj[i]));
    }
    return key;
}

// bare graph canonical key plus caps in canonical coordinates, for the
// UNSAT dominance store
std::pair<std::string, std::vector<std::int64_t>> graph_key_and_caps(const SearchState& st) {
    std::vector<int> verts;
    for (int v = 0; v < st.g.n; ++v)
        if ((st.alive >> v) & 1) verts.push_back(v);
    SmallGraph sub;
    sub.n = static_cast<int>(verts.size());
    sub.adj.assign(sub.n, 0);
    for (int i = 0; i < sub.n; ++i)
        for (int j = i + 1; j < sub.n; ++j)
            if (st.g.has_edge(verts[i], verts[j])) sub.add_edge(i, j);
    auto canon = canonical_form(sub, {});
    std::vector<std::int64_t> caps(sub.n);
    for (int i = 0; i < sub.n; ++i) caps[canon.relabel[i]] = st.caps[verts[i]];
    return {std::move(canon.certificate), std::move(caps)};
}

// greedy strict-degeneracy probe; on success the reversed removal order is a
// legal vertex-deletion sequence for the current caps
std::optional<std::vector<int>> strict_probe(const SearchState& st) {
    std::uint64_t alive = st.alive;
    std::vector<int> order;
    bool progress = true;
    while (alive && progress) {
        progress = false;
        for (int v = 0; v < st.g.n; ++v) {
            if (!((alive >> v) & 1)) continue;
            int d = __builtin_popcountll(st.g.adj[v] & alive);
            if (d < st.caps[v]) {
                order.push_back(v);
                alive &= ~(1ull << v);
                progress = true;
                break;
            }
        }
    }
    if (alive) return std::nullopt;
    return order;
}

struct WeakStarSearch {
    const Graph& graph;
    SearchOptions opt;
    bool strict_weak_moves;  // VertexDelete + DeleteSave instead of weak* moves
    std::uint64_t nodes = 0;
    // per bare-graph key: maximal UNSAT cap vectors (antichain)
    std::map<std::string, std::vector<std::vector<std::int64_t>>> unsat;
    std::map<std::string, bool> exact_memo;  // for strict-weak (no dominance)

    bool unsat_lookup(const SearchState& st) {
        auto [key, caps] = graph_key_and_caps(st);
        auto it = unsat.find(key);
        if (it == unsat.end()) return false;
        for (const auto& stored : it->second) {
            bool dominated = true;
            for (std::size_t i = 0; i < caps.size(); ++i)
                if (caps[i] > stored[i]) {
                    dominated = false;
                    break;
                }
            if (dominated) return true;
        }
        return false;
    }

    void unsat_store(const SearchState& st) {
        auto [key, caps] = graph_key_and_caps(st);
        auto& list = unsat[key];
        for (auto it = list.begin(); it != list.end();) {
            bool old_dominated = true;
            for (std::size_t i = 0; i < caps.size(); ++i)
                if ((*it)[i] > caps[i]) {
                    old_dominated = false;
                    break;
                }
            it = old_dominated ? list.erase(it) : it + 1;
        }
        list.push_back(std::move(caps));
    }

    bool dfs(SearchState& st, std::vector<Operation>& out) {
        if (!st.alive) return true;
        if (++nodes > opt.node_budget) throw budget_exhausted{};
        for (int v = 0; v < st.g.n; ++v)
            if (((st.alive >> v) & 1) && st.caps[v] <= 0) return false;  // never deletable

        // strict-degeneracy probe: a reversed greedy removal order is a legal
        // sequence of plain vertex deletions, valid for either move set
        if (auto probe = strict_probe(st)) {
            for (auto it = probe->rbegin(); it != probe->rend(); ++it)
                out.push_back(Operation::vertex_delete(graph.id(*it)));
            return true;
        }

        std::string memo_key;
        if (strict_weak_moves) {
            memo_key = pair_key(st, opt.canonical_memo);
            auto it = exact_memo.find(memo_key);
            if (it != exact_memo.end()) return it->second;  // only false is stored
        } else if (opt.canonical_memo) {
            if (unsat_lookup(st)) return false;
        } else {
            memo_key = pair_key(st, false);
            auto it = exact_memo.find(memo_key);
            if (it != exact_memo.end()) return it->second;
        }

        std::size_t mark = out.size();
        auto undo_ops = [&] { out.resize(mark); };

        auto try_vertex_delete = [&](int x) -> bool {
            if (st.caps[x] <= 0) return false;
            std::uint64_t nbrs = st.g.adj[x] & st.alive;
            for (int w = 0; w < st.g.n; ++w)
                if (((nbrs >> w) & 1) && st.caps[w] < 1) return false;
            SearchState next = st;
            next.alive &= ~(1ull << x);
            for (int w = 0; w < st.g.n; ++w)
                if ((nbrs >> w) & 1) next.caps[w] -= 1;
            out.push_back(Operation::vertex_delete(graph.id(x)));
            if (dfs(next, out)) return true;
            undo_ops();
            return false;
        };

        for (int x = 0; x < st.g.n; ++x) {
            if (!((st.alive >> x) & 1)) continue;
            if (try_vertex_delete(x)) return true;
        }

        if (strict_weak_moves) {
            for (int x = 0; x < st.g.n; ++x) {
                if (!((st.alive >> x) & 1)) continue;
                std::uint64_t nbrs = st.g.adj[x] & st.alive;
                for (int y = 0; y < st.g.n; ++y) {
                    if (!((nbrs >> y) & 1)) continue;
                    if (!(st.caps[x] > st.caps[y])) continue;
                    bool ok = true;
                    for (int w = 0; w < st.g.n && ok; ++w)
                        if (w != y && ((nbrs >> w) & 1) && st.caps[w] < 1) ok = false;
                    if (!ok) continue;
                    SearchState next = st;
                    next.alive &= ~(1ull << x);
                    for (int w = 0; w < st.g.n; ++w)
                        if (w != y && ((nbrs >> w) & 1)) next.caps[w] -= 1;
                    out.push_back(Operation::delete_save(graph.id(x), graph.id(y)));
                    if (dfs(next, out)) return true;
                    undo_ops();
                }
            }
        } else if (opt.fused_reduce) {
            // EdgeDelete(x,y) after optionally reducing y to level l
            for (int x = 0; x < st.g.n; ++x) {
                if (!((st.alive >> x) & 1)) continue;
                std::uint64_t nbrs = st.g.adj[x] & st.alive;
                for (int y = 0; y < st.g.n; ++y) {
                    if (!((nbrs >> y) & 1)) continue;
                    std::int64_t top = std::min<std::int64_t>(st.caps[y], st.caps[x] - 1);
                    for (std::int64_t l = top; l >= 1; --l) {
                        SearchState next = st;
                        next.g.remove_edge(x, y);
                        next.caps[y] = l;
                        next.caps[x] -= l;
                        if (l < st.caps[y])
                            out.push_back(Operation::reduce(graph.id(y), st.caps[y] - l));
                        out.push_back(Operation::edge_delete(graph.id(x), graph.id(y)));
                        if (dfs(next, out)) return true;
                        undo_ops();
                    }
                }
            }
        } else {
            // unrestricted move set (completeness cross-check)
            for (int x = 0; x < st.g.n; ++x) {
                if (!((st.alive >> x) & 1)) continue;
                std::uint64_t nbrs = st.g.adj[x] & st.alive;
                for (int y = 0; y < st.g.n; ++y) {
                    if (!((nbrs >> y) & 1)) continue;
                    if (!(st.caps[x] > st.caps[y])) continue;
                    SearchState next = st;
                    next.g.remove_edge(x, y);
                    next.caps[x] -= st.caps[y];
                    out.push_back(Operation::edge_delete(graph.id(x), graph.id(y)));
                    if (dfs(next, out)) return true;
                    undo_ops();
                }
                for (std::int64_t s = 1; s < st.caps[x]; ++s) {
                    SearchState next = st;
                    next.caps[x] -= s;
                    out.push_back(Operation::reduce(graph.id(x), s));
                    if (dfs(next, out)) return true;
                    undo_ops();
                }
            }
        }

        if (strict_weak_moves || !opt.canonical_memo)
            exact_memo[memo_key] = false;
        else
            unsat_store(st);
        return false;
    }
};

DecideResult run_search(const Graph& g, const CapMap& f, const SearchOptions& opt,
                        bool strict_weak_moves) {
    f.check_domain(g);
    if (g.n() > 64) throw graph_error("decision procedures support n <= 64");
    WeakStarSearch search{g, opt, strict_weak_moves};
    SearchState st;
    st.g = SmallGraph::from_graph(g);
    st.alive = g.n() == 64 ? ~0ull : (1ull << g.n()) - 1;
    st.caps = f.values;
    std::vector<Operation> ops;
    try {
        if (search.dfs(st, ops)) return DecideYes{make_certificate(g, f, std::move(ops))};
        return DecideNo{};
    } catch (const budget_exhausted&) {
        return DecideUnknown{opt.node_budget};
    }
}

}  // namespace

DecideResult decide_weak_star(const Graph& g, const CapMap& f, const SearchOptions& opt) {
    auto res = run_search(g, f, opt, false);
    if (auto* yes = std::get_if<DecideYes>(&res)) {
        auto check = verify_certificate(g, f, yes->cert, VerifyMode::Full);
        if (!check.accepted) throw op_error("internal: search produced a rejected certificate");
    }
    return res;
}

DecideResult decide_strict_weak(const Graph& g, const CapMap& f, const SearchOptions& opt) {
    auto res = run_search(g, f, opt, true);
    if (auto* yes = std::get_if<DecideYes>(&res)) {
        auto check = verify_certificate(g, f, yes->cert, VerifyMode::Full);
        if (!check.accepted) throw op_error("internal: search produced a rejected certificate");
    }
    return res;
}

DegeneracyResult weak_star_degeneracy(const Graph& g, const SearchOptions& opt) {
    if (g.n() == 0) throw graph_error("weak_star_degeneracy requires a non-empty graph");
    for (int d = 1; d <= g.n(); ++d) {
        auto res = decide_weak_star(g, CapMap::constant(g, d), opt);
        if (is_yes(res)) return {d, std::get<DecideYes>(res).cert};
        if (is_unknown(res)) return {std::nullopt, std::nullopt};
    }
    // strict degeneracy (= n for K_n) always bounds wd* above, so this line
    // is unreachable for simple graphs
    throw op_error("internal: no weak* degeneracy value up to n");
}

std::optional<std::vector<int>> decide_strict_degenerate(const Graph& g, const CapMap& f) {
    f.check_domain(g);
    std::vector<bool> alive(g.n(), true);
    std::vector<int> deg(g.n());
    for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
    std::vector<int> order;
    for (int step = 0; step < g.n(); ++step) {
        int pick = -1;
        for (int v = 0; v < g.n(); ++v)
            if (alive[v] && deg[v] < f[v]) {
                pick = v;
                break;
            }
        if (pick < 0) return std::nullopt;
        alive[pick] = false;
        for (int w : g.neighbors(pick))
            if (alive[w]) --deg[w];
        order.push_back(pick);
    }
    return order;
}

// --- certificate normalization ---

Certificate normalize_certificate(const Graph& g, const CapMap& f, const Certificate& cert) {
    auto pre = verify_certificate(g, f, cert, VerifyMode::Full);
    if (!pre.accepted)
        throw op_error("normalize_certificate requires a verifying certificate (step " +
                       std::to_string(pre.reject->step) + ": " + pre.reject->reason + ")");
    int n = static_cast<int>(cert.ops.size());
    // target[i] = index of the EdgeDelete a kept ReduceValue is deferred to
    std::vector<int> target(n, -1);
    for (int i = 0; i < n; ++i) {
        if (cert.ops[i].kind != OpKind::ReduceValue) continue;
        const std::string& y = cert.ops[i].x;
        for (int j = i + 1; j < n; ++j) {
            const auto& oj = cert.ops[j];
            if ((oj.kind == OpKind::VertexDelete || oj.kind == OpKind::DeleteSave) && oj.x == y)
                break;  // y leaves the graph; later EdgeDeletes cannot reference it
            if (oj.kind == OpKind::EdgeDelete && oj.y == y) {
                target[i] = j;
                break;
            }
        }
    }
    Certificate out;
    out.initial_graph6 = cert.initial_graph6;
    out.initial_caps = cert.initial_caps;
    for (int j = 0; j < n; ++j) {
        if (cert.ops[j].kind == OpKind::ReduceValue) continue;
        for (int i = 0; i < j; ++i)
            if (target[i] == j) out.ops.push_back(cert.ops[i]);
        out.ops.push_back(cert.ops[j]);
    }
    auto post = verify_certificate(g, f, out, VerifyMode::Full);
    if (!post.accepted) throw op_error("internal: normalization broke the certificate");
    return out;
}

// --- certificate split (constructive Lemma 2.1) ---

namespace {

struct SplitState {
    Graph graph;
    CapMap f;
    CapMap g;
};

struct SplitOut {
    std::set<std::string> x_ids;
    std::vector<Operation> ops_x;
    std::vector<Operation> ops_rest;
};

std::int64_t clamp64(std::int64_t v, std::int64_t lo, std::int64_t hi) {
    return std::max(lo, std::min(v, hi));
}

SplitOut split_rec(const SplitState& st, std::span<const Operation> ops) {
    const Graph& G = st.graph;
    if (st.g.values == st.f.values) {
        SplitOut out;
        for (int v = 0; v < G.n(); ++v) out.x_ids.insert(G.id(v));
        out.ops_x.assign(ops.begin(), ops.end());
        return out;
    }
    if (G.n() == 0) return {};
    if (ops.empty()) throw op_error("certificate_split: certificate does not empty the pair");

    Operation op = ops.front();
    auto rest = ops.subspan(1);
    if (op.kind == OpKind::DeleteSave)
        throw op_error("certificate_split expects weak* certificates (no DeleteSave)");

    if (op.kind == OpKind::ReduceValue) {
        int x = G.index_of(op.x);
        SplitState next{G, st.f, st.g};
        next.f[x] -= op.s;
        next.g[x] = std::min(st.g[x], next.f[x]);
        auto sub = split_rec(next, rest);
        bool in_x = sub.x_ids.count(op.x) > 0;
        if (in_x && st.g[x] > next.g[x])
            sub.ops_x.insert(sub.ops_x.begin(), Operation::reduce(op.x, st.g[x] - next.g[x]));
        if (!in_x) {
            std::int64_t have = st.f[x] - st.g[x];
            std::int64_t need = next.f[x] - next.g[x];
            if (have > need)
                sub.ops_rest.insert(sub.ops_rest.begin(), Operation::reduce(op.x, have - need));
        }
        return sub;
    }

    if (op.kind == OpKind::EdgeDelete) {
        int x = G.index_of(op.x), y = G.index_of(op.y);
        SplitState next;
        next.f = st.f;
        next.f[x] -= st.f[y];
        next.g = st.g;
        next.g[x] = clamp64(st.g[x] - st.g[y], 0, next.f[x]);
        // drop the edge
        {
            std::vector<std::pair<std::string, std::string>> edges;
            for (auto [u, v] : G.edge_list())
                if (!(std::minmax(u, v) == std::minmax(x, y)))
                    edges.emplace_back(G.id(u), G.id(v));
            next.graph = Graph::from_edges(G.ids(), edges);
        }
        auto sub = split_rec(next, rest);
        bool x_in = sub.x_ids.count(op.x) > 0, y_in = sub.x_ids.count(op.y) > 0;
        if (x_in && y_in) {
            std::int64_t delta = st.g[x] - st.g[y] - next.g[x];
            if (delta < 0) throw op_error("internal: split edge case placement violated");
            std::vector<Operation> pre;
            if (delta > 0) pre.push_back(Operation::reduce(op.x, delta));
            pre.push_back(Operation::edge_delete(op.x, op.y));
            sub.ops_x.insert(sub.ops_x.begin(), pre.begin(), pre.end());
        } else if (x_in && !y_in) {
            std::int64_t delta = st.g[x] - next.g[x];
            if (delta > 0)
                sub.ops_x.insert(sub.ops_x.begin(), Operation::reduce(op.x, delta));
        } else if (!x_in && y_in) {
            std::int64_t have = st.f[x] - st.g[x];
            std::int64_t need = next.f[x] - next.g[x];
            if (have > need)
                sub.ops_rest.insert(sub.ops_rest.begin(), Operation::reduce(op.x, have - need));
        } else {
            std::int64_t have = st.f[x] - st.g[x];
            std::int64_t cost = st.f[y] - st.g[y];
            std::int64_t need = next.f[x] - next.g[x];
            std::int64_t delta = have - cost - need;
            if (delta < 0) throw op_error("internal: split edge case placement violated");
            std::vector<Operation> pre;
            if (delta > 0) pre.push_back(Operation::reduce(op.x, delta));
            pre.push_back(Operation::edge_delete(op.x, op.y));
            sub.ops_rest.insert(sub.ops_rest.begin(), pre.begin(), pre.end());
        }
        return sub;
    }

    // VertexDelete
    int x = G.index_of(op.x);
    bool x_joins = st.g[x] >= 1;
    SplitState next;
    next.graph = G.remove_vertex(x);
    next.f.values.resize(next.graph.n());
    next.g.values.resize(next.graph.n());
    for (int v2 = 0; v2 < next.graph.n(); ++v2) {
        int v = G.index_of(next.graph.id(v2));
        bool nb = G.has_edge(x, v);
        next.f[v2] = st.f[v] - (nb ? 1 : 0);
        if (!nb) {
            next.g[v2] = st.g[v];
        } else if (x_joins) {
            next.g[v2] = st.g[v] >= 1 ? st.g[v] - 1 : 0;
        } else {
            next.g[v2] = std::min(st.g[v], st.f[v] - 1);
        }
    }
    auto sub = split_rec(next, rest);
    if (x_joins) {
        sub.x_ids.insert(op.x);
        // deleting x inside X matches the g' caps exactly on X; the rest side
        // never saw x, but non-members of X among N(x) with g = 0 kept a
        // one-higher rest cap
        std::vector<Operation> pre;
        for (int v2 = 0; v2 < next.graph.n(); ++v2) {
            int v = G.index_of(next.graph.id(v2));
            if (!G.has_edge(x, v) || sub.x_ids.count(G.id(v))) continue;
            std::int64_t have = st.f[v] - st.g[v];
            std::int64_t need = next.f[v2] - next.g[v2];
            if (have > need) pre.push_back(Operation::reduce(G.id(v), have - need));
        }
        sub.ops_rest.insert(sub.ops_rest.begin(), pre.begin(), pre.end());
        sub.ops_x.insert(sub.ops_x.begin(), Operation::vertex_delete(op.x));
    } else {
        // x goes to the rest side; lift X members whose g cap was clipped
        std::vector<Operation> pre_x;
        for (int v2 = 0; v2 < next.graph.n(); ++v2) {
            int v = G.index_of(next.graph.id(v2));
            if (!G.has_edge(x, v) || !sub.x_ids.count(G.id(v))) continue;
            if (st.g[v] > next.g[v2])
                pre_x.push_back(Operation::reduce(G.id(v), st.g[v] - next.g[v2]));
        }
        sub.ops_x.insert(sub.ops_x.begin(), pre_x.begin(), pre_x.end());
        sub.ops_rest.insert(sub.ops_rest.begin(), Operation::vertex_delete(op.x));
    }
    return sub;
}

}  // namespace

SplitResult certificate_split(const Graph& g, const CapMap& f, const CapMap& gmap,
                              const Certificate& cert) {
    f.check_domain(g);
    gmap.check_domain(g);
    for (int v = 0; v < g.n(); ++v)
        if (gmap[v] > f[v]) throw op_error("certificate_split requires g <= f pointwise");
    auto pre = verify_certificate(g, f, cert, VerifyMode::Full);
    if (!pre.accepted)
        throw op_error("certificate_split requires a verifying certificate (step " +
                       std::to_string(pre.reject->step) + ": " + pre.reject->reason + ")");

    // split DeleteSave into EdgeDelete + VertexDelete first
    std::vector<Operation> ops;
    for (const auto& op : cert.ops) {
        if (op.kind == OpKind::DeleteSave) {
            ops.push_back(Operation::edge_delete(op.x, op.y));
            ops.push_back(Operation::vertex_delete(op.x));
        } else {
            ops.push_back(op);
        }
    }

    auto out = split_rec(SplitState{g, f, gmap}, ops);

    SplitResult res;
    std::vector<int> x_idx, rest_idx;
    for (int v = 0; v < g.n(); ++v)
        (out.x_ids.count(g.id(v)) ? x_idx : rest_idx).push_back(v);
    res.x_vertices = x_idx;
    Graph gx = g.induced(x_idx), gr = g.induced(rest_idx);
    CapMap cx, cr;
    for (int v2 = 0; v2 < gx.n(); ++v2) cx.values.push_back(gmap[g.index_of(gx.id(v2))]);
    for (int v2 = 0; v2 < gr.n(); ++v2) {
        int v = g.index_of(gr.id(v2));
        cr.values.push_back(f[v] - gmap[v]);
    }
    res.cert_x = make_certificate(gx, cx, std::move(out.ops_x));
    res.cert_rest = make_certificate(gr, cr, std::move(out.ops_rest));
    auto vx = verify_certificate(gx, cx, res.cert_x, VerifyMode::Full);
    if (!vx.accepted)
        throw op_error("internal: split X certificate rejected at step " +
                       std::to_string(vx.reject->step) + ": " + vx.reject->reason);
    auto vr = verify_certificate(gr, cr, res.cert_rest, VerifyMode::Full);
    if (!vr.accepted)
        throw op_error("internal: split rest certificate rejected at step " +
                       std::to_string(vr.reject->step) + ": " + vr.reject->reason);
    return res;
}

}  // namespace wstar
