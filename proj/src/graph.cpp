#include "wstar/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "json.hpp"

namespace wstar {

bool id_less(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

Graph Graph::from_edges(std::vector<std::string> vertex_ids,
                        const std::vector<std::pair<std::string, std::string>>& edges) {
    Graph g;
    std::sort(vertex_ids.begin(), vertex_ids.end(), id_less);
    for (std::size_t i = 0; i + 1 < vertex_ids.size(); ++i)
        if (vertex_ids[i] == vertex_ids[i + 1])
            throw graph_error("duplicate vertex id: " + vertex_ids[i]);
    g.ids_ = std::move(vertex_ids);
    for (int i = 0; i < g.n(); ++i) g.index_.emplace(g.ids_[i], i);
    g.adj_.assign(g.n(), {});
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : edges) {
        int u = g.index_of(a), v = g.index_of(b);
        if (u < 0 || v < 0) throw graph_error("edge references unknown vertex");
        if (u == v) throw graph_error("loop at vertex " + a);
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) throw graph_error("parallel edge " + a + "-" + b);
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        ++g.m_;
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

int Graph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
    std::vector<bool> keep(n(), false);
    for (int v : vertices) keep[v] = true;
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int v = 0; v < n(); ++v)
        if (keep[v]) ids.push_back(ids_[v]);
    for (auto [u, v] : edge_list())
        if (keep[u] && keep[v]) edges.emplace_back(ids_[u], ids_[v]);
    return from_edges(std::move(ids), edges);
}

Graph Graph::remove_vertex(int v) const {
    std::vector<int> kept;
    for (int u = 0; u < n(); ++u)
        if (u != v) kept.push_back(u);
    return induced(kept);
}

std::vector<int> Graph::component_of(int v) const {
    std::vector<bool> vis(n(), false);
    std::vector<int> out, stack{v};
    vis[v] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        out.push_back(u);
        for (int w : adj_[u])
            if (!vis[w]) {
                vis[w] = true;
                stack.push_back(w);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<bool> vis(n(), false);
    std::vector<std::vector<int>> out;
    for (int v = 0; v < n(); ++v) {
        if (vis[v]) continue;
        auto comp = component_of(v);
        for (int u : comp) vis[u] = true;
        out.push_back(std::move(comp));
    }
    return out;
}

bool Graph::is_connected() const {
    if (n() == 0) return true;
    return static_cast<int>(component_of(0).size()) == n();
}

bool Graph::is_complete() const { return 2 * m_ == n() * (n() - 1); }

bool Graph::is_cycle_graph() const {
    if (n() < 3 || m_ != n()) return false;
    for (int v = 0; v < n(); ++v)
        if (degree(v) != 2) return false;
    return is_connected();
}

std::vector<bool> Graph::articulation_points() const {
    std::vector<bool> cut(n(), false);
    std::vector<int> disc(n(), -1), low(n(), 0), parent(n(), -1);
    int timer = 0;
    // iterative DFS
    for (int root = 0; root < n(); ++root) {
        if (disc[root] != -1) continue;
        std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
        disc[root] = low[root] = timer++;
        int root_children = 0;
        while (!stack.empty()) {
            auto& [u, i] = stack.back();
            if (i < adj_[u].size()) {
                int w = adj_[u][i++];
                if (disc[w] == -1) {
                    parent[w] = u;
                    if (u == root) ++root_children;
                    disc[w] = low[w] = timer++;
                    stack.emplace_back(w, 0);
                } else if (w != parent[u]) {
                    low[u] = std::min(low[u], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().first;
                    low[p] = std::min(low[p], low[u]);
                    if (p != root && low[u] >= disc[p]) cut[p] = true;
                }
            }
        }
        if (root_children >= 2) cut[root] = true;
    }
    return cut;
}

bool Graph::is_biconnected() const {
    if (n() < 3 || !is_connected()) return false;
    auto cut = articulation_points();
    return std::none_of(cut.begin(), cut.end(), [](bool b) { return b; });
}

bool Graph::is_three_connected() const {
    // G is 3-connected iff n >= 4 and G - v is 2-connected for every v.
    if (n() < 4) return false;
    for (int v = 0; v < n(); ++v)
        if (!remove_vertex(v).is_biconnected()) return false;
    return true;
}

namespace {

// local vertex connectivity >= k between non-adjacent s,t via vertex-split
// unit-capacity max flow, stopping after k augmenting paths
bool local_connectivity_at_least(const Graph& g, int s, int t, int k) {
    int n = g.n();
    // node 2v = in, 2v+1 = out; arcs: in->out cap 1 (inf for s,t),
    // out(u)->in(v) cap 1 per edge (both directions)
    struct Arc {
        int to, cap, rev;
    };
    std::vector<std::vector<Arc>> a(2 * n);
    auto add = [&](int from, int to, int cap) {
        a[from].push_back({to, cap, static_cast<int>(a[to].size())});
        a[to].push_back({from, 0, static_cast<int>(a[from].size()) - 1});
    };
    for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? k + 1 : 1);
    for (auto [u, v] : g.edge_list()) {
        add(2 * u + 1, 2 * v, 1);
        add(2 * v + 1, 2 * u, 1);
    }
    int flow = 0;
    int src = 2 * s + 1, dst = 2 * t;
    while (flow < k) {
        std::vector<int> prev_node(2 * n, -1), prev_arc(2 * n, -1);
        std::queue<int> q;
        q.push(src);
        prev_node[src] = src;
        while (!q.empty() && prev_node[dst] == -1) {
            int u = q.front();
            q.pop();
            for (int i = 0; i < static_cast<int>(a[u].size()); ++i) {
                if (a[u][i].cap > 0 && prev_node[a[u][i].to] == -1) {
                    prev_node[a[u][i].to] = u;
                    prev_arc[a[u][i].to] = i;
                    q.push(a[u][i].to);
                }
            }
        }
        if (prev_node[dst] == -1) break;
        for (int v = dst; v != src; v = prev_node[v]) {
            auto& arc = a[prev_node[v]][prev_arc[v]];
            arc.cap -= 1;
            a[v][arc.rev].cap += 1;
        }
        ++flow;
    }
    return flow >= k;
}

}  // namespace

bool Graph::is_k_connected(int k) const {
    if (k <= 0) return true;
    if (k == 1) return n() >= 2 && is_connected();
    if (n() < k + 1) return false;
    if (!is_connected()) return false;
    // Even-Tarjan reduction: check kappa(v_i, w) >= k for i < k and all
    // non-adjacent w, plus pairs among the first k vertices.
    for (int i = 0; i < k && i < n(); ++i) {
        for (int w = 0; w < n(); ++w) {
            if (w == i || has_edge(i, w)) continue;
            if (w < i) continue;
            if (!local_connectivity_at_least(*this, i, w, k)) return false;
        }
        for (int j = 0; j < i; ++j)
            if (!has_edge(i, j) && !local_connectivity_at_least(*this, i, j, k)) return false;
    }
    return true;
}

CapMap CapMap::constant(const Graph& g, std::int64_t k) {
    CapMap f;
    f.values.assign(g.n(), k);
    return f;
}

CapMap CapMap::degrees(const Graph& g) {
    CapMap f;
    f.values.resize(g.n());
    for (int v = 0; v < g.n(); ++v) f.values[v] = g.degree(v);
    return f;
}

void CapMap::check_domain(const Graph& g) const {
    if (size() != g.n()) throw graph_error("cap map domain does not match vertex set");
    for (auto x : values)
        if (x < 0) throw graph_error("negative capacity");
}

CapMap truncated_cap(const Graph& g, std::int64_t k) {
    if (k < 1) throw graph_error("truncated_cap requires k >= 1");
    CapMap f;
    f.values.resize(g.n());
    for (int v = 0; v < g.n(); ++v) f.values[v] = std::min<std::int64_t>(k, g.degree(v));
    return f;
}

// --- graph6 ---

namespace {

void append_g6_number(std::string& s, int n) {
    if (n <= 62) {
        s.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        s.push_back(126);
        s.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        s.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        s.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw graph_error("graph too large for this graph6 writer");
    }
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) throw graph_error("empty graph6 string");
    std::size_t pos = 0;
    long long n = 0;
    auto byte = [&](std::size_t i) -> int {
        if (i >= s.size()) throw graph_error("truncated graph6 header");
        int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw graph_error("invalid graph6 byte");
        return c - 63;
    };
    if (s[0] != 126) {
        n = byte(0);
        pos = 1;
    } else if (s.size() > 1 && s[1] != 126) {
        n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        throw graph_error("graph6 256-bit order form not supported");
    }
    std::vector<std::string> ids(n);
    for (long long i = 0; i < n; ++i) ids[i] = std::to_string(i);
    std::vector<std::pair<std::string, std::string>> edges;
    long long bits = n * (n - 1) / 2;
    long long need = (bits + 5) / 6;
    if (static_cast<long long>(s.size()) - static_cast<long long>(pos) != need)
        throw graph_error("graph6 body has wrong length");
    long long bit = 0;
    for (long long col = 1; col < n; ++col) {
        for (long long row = 0; row < col; ++row, ++bit) {
            int b = byte(pos + bit / 6);
            if ((b >> (5 - bit % 6)) & 1)
                edges.emplace_back(std::to_string(row), std::to_string(col));
        }
    }
    // trailing pad bits must be zero for byte-exact round trips
    for (long long t = bit; t < need * 6; ++t) {
        int b = byte(pos + t / 6);
        if ((b >> (5 - t % 6)) & 1) throw graph_error("graph6 nonzero padding");
    }
    return Graph::from_edges(std::move(ids), edges);
}

std::string to_graph6(const Graph& g) {
    int n = g.n();
    std::string out;
    append_g6_number(out, n);
    long long bits = static_cast<long long>(n) * (n - 1) / 2;
    std::vector<unsigned char> body((bits + 5) / 6, 0);
    long long bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            if (g.has_edge(row, col)) body[bit / 6] |= 1 << (5 - bit % 6);
        }
    }
    for (unsigned char b : body) out.push_back(static_cast<char>(b + 63));
    return out;
}

Graph parse_graph_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<std::string> ids;
    for (const auto& v : j.at("vertices")) ids.push_back(v.get<std::string>());
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw graph_error("edge must be a pair");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return Graph::from_edges(std::move(ids), edges);
}

std::string to_graph_json(const Graph& g) {
    nlohmann::json j;
    j["vertices"] = g.ids();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edge_list()) edges.push_back({g.id(u), g.id(v)});
    j["edges"] = edges;
    return j.dump();
}

Graph parse_graph(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_graph_json(text);
    return parse_graph6(text);
}

std::string caps_to_json(const Graph& g, const CapMap& f) {
    f.check_domain(g);
    nlohmann::json caps = nlohmann::json::object();
    for (int v = 0; v < g.n(); ++v) caps[g.id(v)] = f[v];
    nlohmann::json j;
    j["caps"] = caps;
    return j.dump();
}

CapMap caps_from_json(const Graph& g, const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    const auto& caps = j.at("caps");
    CapMap f;
    f.values.assign(g.n(), -1);
    for (auto it = caps.begin(); it != caps.end(); ++it) {
        int v = g.index_of(it.key());
        if (v < 0) throw graph_error("caps reference unknown vertex " + it.key());
        f[v] = it.value().get<std::int64_t>();
    }
    f.check_domain(g);
    return f;
}

// --- blocks ---

BlockTree block_decomposition(const Graph& g) {
    BlockTree bt;
    int n = g.n();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<bool> cut(n, false);
    std::vector<std::pair<int, int>> estack;
    int timer = 0;

    auto emit_block = [&](int u, int w) {
        std::set<int> verts;
        while (!estack.empty()) {
            auto [a, b] = estack.back();
            estack.pop_back();
            verts.insert(a);
            verts.insert(b);
            if (a == u && b == w) break;
        }
        bt.blocks.emplace_back(verts.begin(), verts.end());
    };

    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            bt.blocks.push_back({root});
            continue;
        }
        std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
        disc[root] = low[root] = timer++;
        int root_children = 0;
        while (!stack.empty()) {
            auto& [u, i] = stack.back();
            if (i < g.neighbors(u).size()) {
                int w = g.neighbors(u)[i++];
                if (disc[w] == -1) {
                    parent[w] = u;
                    if (u == root) ++root_children;
                    estack.emplace_back(u, w);
                    disc[w] = low[w] = timer++;
                    stack.emplace_back(w, 0);
                } else if (w != parent[u] && disc[w] < disc[u]) {
                    estack.emplace_back(u, w);
                    low[u] = std::min(low[u], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().first;
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] >= disc[p]) {
                        if (p != root || root_children >= 1) emit_block(p, u);
                        if (p != root) cut[p] = true;
                    }
                }
            }
        }
        if (root_children >= 2) cut[root] = true;
    }
    for (int v = 0; v < n; ++v)
        if (cut[v]) bt.cut_vertices.push_back(v);
    for (std::size_t b = 0; b < bt.blocks.size(); ++b) {
        std::vector<int> cuts_in;
        for (int v : bt.blocks[b])
            if (cut[v]) cuts_in.push_back(v);
        if (cuts_in.size() <= 1) {
            bt.leaf_blocks.push_back(static_cast<int>(b));
            bt.leaf_roots.push_back(cuts_in.empty() ? -1 : cuts_in[0]);
        }
    }
    return bt;
}

namespace {

bool blocks_all_match(const Graph& g, bool allow_even_cycles) {
    if (!g.is_connected()) throw graph_error("tree recognizers require connected input");
    auto bt = block_decomposition(g);
    for (const auto& block : bt.blocks) {
        Graph b = g.induced(block);
        if (b.is_complete()) continue;  // covers K_1 and K_2
        if (b.is_cycle_graph()) {
            if (allow_even_cycles || b.n() % 2 == 1) continue;
        }
        return false;
    }
    return true;
}

}  // namespace

bool is_gallai_tree(const Graph& g) { return blocks_all_match(g, false); }
bool is_gdp_tree(const Graph& g) { return blocks_all_match(g, true); }

std::optional<std::vector<int>> degeneracy_ordering(const Graph& g, int cap,
                                                    bool component_consecutive) {
    if (cap < 0) throw graph_error("degeneracy_ordering requires cap >= 0");
    std::vector<std::vector<int>> groups;
    if (component_consecutive)
        groups = g.components();
    else if (g.n() > 0)
        groups.push_back([&] {
            std::vector<int> all(g.n());
            for (int v = 0; v < g.n(); ++v) all[v] = v;
            return all;
        }());
    std::vector<int> order;
    for (const auto& group : groups) {
        std::vector<bool> in_group(g.n(), false), removed(g.n(), false);
        for (int v : group) in_group[v] = true;
        std::vector<int> deg(g.n(), 0);
        for (int v : group) {
            for (int w : g.neighbors(v))
                if (in_group[w]) ++deg[v];
        }
        std::vector<int> local;
        for (std::size_t step = 0; step < group.size(); ++step) {
            int best = -1;
            for (int v : group) {
                if (removed[v]) continue;
                if (best == -1 || deg[v] < deg[best]) best = v;  // id ties: group sorted
            }
            if (deg[best] > cap) return std::nullopt;
            removed[best] = true;
            for (int w : g.neighbors(best))
                if (in_group[w] && !removed[w]) --deg[w];
            local.push_back(best);
        }
        // removal order: each removed vertex has <= cap neighbours *later*;
        // reverse so each has <= cap earlier neighbours
        std::reverse(local.begin(), local.end());
        order.insert(order.end(), local.begin(), local.end());
    }
    return order;
}

}  // namespace wstar
