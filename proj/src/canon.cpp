#include "wstar/canon.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wstar {

SmallGraph SmallGraph::from_graph(const Graph& g) {
    if (g.n() > 64) throw graph_error("graph too large for search representation");
    SmallGraph s;
    s.n = g.n();
    s.adj.assign(s.n, 0);
    for (auto [u, v] : g.edge_list()) s.add_edge(u, v);
    return s;
}

namespace {

// stable colour refinement: colour' = (colour, multiset of neighbour colours)
std::vector<int> refine(const SmallGraph& g, std::vector<int> colour) {
    int n = g.n;
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (int w = 0; w < n; ++w)
                if (g.has_edge(v, w)) nb.push_back(colour[w]);
            std::sort(nb.begin(), nb.end());
            nb.insert(nb.begin(), colour[v]);
            sig[v] = {std::move(nb), v};
        }
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return sig[a].first < sig[b].first; });
        std::vector<int> next(n);
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]].first != sig[order[i - 1]].first) ++c;
            next[order[i]] = c;
        }
        if (next == colour) return colour;
        colour = std::move(next);
    }
}

std::string certificate_of(const SmallGraph& g, const std::vector<int>& perm_new_to_old,
                           const std::vector<std::int64_t>& colours) {
    int n = g.n;
    std::string s;
    s.reserve(n * 10 + n * n / 8 + 8);
    for (int i = 0; i < n; ++i) {
        std::int64_t c = colours.empty() ? 0 : colours[perm_new_to_old[i]];
        s.append(reinterpret_cast<const char*>(&c), sizeof(c));
    }
    unsigned char cur = 0;
    int bits = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            cur = static_cast<unsigned char>(cur << 1 |
                                             (g.has_edge(perm_new_to_old[i], perm_new_to_old[j]) ? 1 : 0));
            if (++bits == 8) {
                s.push_back(static_cast<char>(cur));
                cur = 0;
                bits = 0;
            }
        }
    if (bits) s.push_back(static_cast<char>(cur << (8 - bits)));
    return s;
}

struct CanonSearch {
    const SmallGraph& g;
    const std::vector<std::int64_t>& colours;
    std::string best;
    std::vector<int> best_perm;  // new -> old

    void run(std::vector<int> colour) {
        colour = refine(g, colour);
        int n = g.n;
        // find first non-singleton cell
        std::vector<std::vector<int>> cells;
        {
            std::map<int, std::vector<int>> by;
            for (int v = 0; v < n; ++v) by[colour[v]].push_back(v);
            for (auto& [c, vs] : by) cells.push_back(vs);
        }
        const std::vector<int>* target = nullptr;
        for (const auto& cell : cells)
            if (cell.size() > 1) {
                target = &cell;
                break;
            }
        if (!target) {
            std::vector<int> new_to_old(n);
            for (int v = 0; v < n; ++v) new_to_old[colour[v]] = v;
            auto cert = certificate_of(g, new_to_old, colours);
            if (best.empty() || cert < best) {
                best = cert;
                best_perm = new_to_old;
            }
            return;
        }
        for (int v : *target) {
            // individualize v: give it a colour just below its cell
            int cv = colour[v];
            auto next = colour;
            for (int u = 0; u < n; ++u)
                if (colour[u] >= cv) next[u] = colour[u] + 1;
            next[v] = cv;
            run(next);
        }
    }
};

}  // namespace

CanonResult canonical_form(const SmallGraph& g, const std::vector<std::int64_t>& colours) {
    int n = g.n;
    // initial colour classes from the explicit colours
    std::vector<int> init(n, 0);
    if (!colours.empty()) {
        std::vector<std::int64_t> sorted(colours.begin(), colours.end());
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            init[v] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), colours[v]) - sorted.begin());
    }
    CanonSearch search{g, colours, {}, {}};
    search.run(init);
    CanonResult res;
    res.certificate = std::move(search.best);
    res.relabel.assign(n, 0);
    for (int i = 0; i < n; ++i) res.relabel[search.best_perm[i]] = i;
    if (n == 0) res.certificate = "";
    return res;
}

std::string canonical_key(const SmallGraph& g) { return canonical_form(g, {}).certificate; }

namespace {

Graph small_to_graph(const SmallGraph& s) {
    std::vector<std::string> ids(s.n);
    for (int i = 0; i < s.n; ++i) ids[i] = std::to_string(i);
    std::vector<std::pair<std::string, std::string>> edges;
    for (int u = 0; u < s.n; ++u)
        for (int v = u + 1; v < s.n; ++v)
            if (s.has_edge(u, v)) edges.emplace_back(std::to_string(u), std::to_string(v));
    return Graph::from_edges(std::move(ids), edges);
}

}  // namespace

std::vector<Graph> connected_graphs(int n) {
    if (n > 8) throw graph_error("connected_graphs supports n <= 8");
    if (n <= 0) return {};
    // augmentation: every connected graph arises from a connected graph on
    // n-1 vertices by adding a vertex joined to a nonempty set (remove any
    // non-cut vertex to see this)
    std::vector<SmallGraph> level;
    {
        SmallGraph k1;
        k1.n = 1;
        k1.adj.assign(1, 0);
        level.push_back(k1);
    }
    for (int sz = 2; sz <= n; ++sz) {
        std::set<std::string> seen;
        std::vector<SmallGraph> next;
        for (const auto& g : level) {
            for (std::uint64_t s = 1; s < (1ull << g.n); ++s) {
                SmallGraph h = g;
                h.n = g.n + 1;
                h.adj.push_back(0);
                for (int v = 0; v < g.n; ++v)
                    if ((s >> v) & 1) h.add_edge(v, g.n);
                auto key = canonical_key(h);
                if (seen.insert(key).second) next.push_back(h);
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (const auto& g : level) out.push_back(small_to_graph(g));
    return out;
}

std::vector<Graph> graphs_with_edges(int m) {
    if (m > 9) throw graph_error("graphs_with_edges supports m <= 9");
    // augmentation by edges: a graph with k+1 edges and no isolated vertices
    // arises from one with k edges by adding an edge between existing
    // vertices, an existing and a fresh vertex, or two fresh vertices
    std::vector<SmallGraph> level;
    {
        SmallGraph k2;
        k2.n = 2;
        k2.adj.assign(2, 0);
        k2.add_edge(0, 1);
        level.push_back(k2);
    }
    for (int k = 2; k <= m; ++k) {
        std::set<std::string> seen;
        std::vector<SmallGraph> next;
        auto offer = [&](const SmallGraph& h) {
            auto key = canonical_key(h);
            if (seen.insert(key).second) next.push_back(h);
        };
        for (const auto& g : level) {
            for (int u = 0; u < g.n; ++u)
                for (int v = u + 1; v < g.n; ++v)
                    if (!g.has_edge(u, v)) {
                        SmallGraph h = g;
                        h.add_edge(u, v);
                        offer(h);
                    }
            for (int u = 0; u < g.n; ++u) {
                SmallGraph h = g;
                h.n = g.n + 1;
                h.adj.push_back(0);
                h.add_edge(u, g.n);
                offer(h);
            }
            SmallGraph h = g;
            h.n = g.n + 2;
            h.adj.push_back(0);
            h.adj.push_back(0);
            h.add_edge(g.n, g.n + 1);
            offer(h);
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (const auto& g : level) out.push_back(small_to_graph(g));
    return out;
}

}  // namespace wstar
