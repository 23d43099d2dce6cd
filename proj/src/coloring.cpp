#include "wstar/coloring.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "json.hpp"
#include "wstar/canon.hpp"

namespace wstar {

void ListAssignment::check_domain(const Graph& g) const {
    if (static_cast<int>(lists.size()) != g.n())
        throw graph_error("list assignment domain does not match vertex set");
}

ListAssignment lists_from_json(const Graph& g, const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    const auto& ls = j.at("lists");
    ListAssignment L;
    L.lists.assign(g.n(), {});
    for (auto it = ls.begin(); it != ls.end(); ++it) {
        int v = g.index_of(it.key());
        if (v < 0) throw graph_error("lists reference unknown vertex " + it.key());
        for (const auto& tok : it.value()) L.lists[v].push_back(tok.get<std::string>());
    }
    return L;
}

std::string lists_to_json(const Graph& g, const ListAssignment& L) {
    L.check_domain(g);
    nlohmann::json ls = nlohmann::json::object();
    for (int v = 0; v < g.n(); ++v) ls[g.id(v)] = L.lists[v];
    nlohmann::json j;
    j["lists"] = ls;
    return j.dump();
}

void Cover::check(const Graph& g, bool require_simple) const {
    if (static_cast<int>(list_size.size()) != g.n())
        throw graph_error("cover node sets do not match vertex set");
    for (int s : list_size)
        if (s < 0) throw graph_error("negative node count");
    for (const auto& l : links) {
        if (l.u < 0 || l.u >= g.n() || l.v < 0 || l.v >= g.n() || !g.has_edge(l.u, l.v))
            throw graph_error("cover link does not sit on an edge");
        if (l.iu < 0 || l.iu >= list_size[l.u] || l.iv < 0 || l.iv >= list_size[l.v])
            throw graph_error("cover link references a missing node");
    }
    if (require_simple && !is_simple(g)) throw graph_error("cover is not simple");
}

bool Cover::is_simple(const Graph&) const {
    std::set<std::tuple<int, int, int, int>> seen;  // (u,v,side,node) per edge
    for (const auto& l : links) {
        int u = l.u, v = l.v, iu = l.iu, iv = l.iv;
        if (u > v) {
            std::swap(u, v);
            std::swap(iu, iv);
        }
        if (!seen.insert({u, v, 0, iu}).second) return false;
        if (!seen.insert({u, v, 1, iv}).second) return false;
    }
    return true;
}

Cover cover_from_json(const Graph& g, const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Cover c;
    c.list_size.assign(g.n(), 0);
    std::map<std::string, std::pair<int, int>> node_of;  // node-id -> (vertex, index)
    const auto& nodes = j.at("nodes");
    for (auto it = nodes.begin(); it != nodes.end(); ++it) {
        int v = g.index_of(it.key());
        if (v < 0) throw graph_error("cover references unknown vertex " + it.key());
        int i = 0;
        for (const auto& nid : it.value()) node_of[nid.get<std::string>()] = {v, i++};
        c.list_size[v] = i;
    }
    for (const auto& link : j.at("links")) {
        auto a = node_of.at(link[0].get<std::string>());
        auto b = node_of.at(link[1].get<std::string>());
        c.links.push_back({a.first, a.second, b.first, b.second});
    }
    c.check(g, false);
    return c;
}

std::string cover_to_json(const Graph& g, const Cover& cover) {
    nlohmann::json nodes = nlohmann::json::object();
    auto name = [&](int v, int i) { return g.id(v) + "#" + std::to_string(i); };
    for (int v = 0; v < g.n(); ++v) {
        auto arr = nlohmann::json::array();
        for (int i = 0; i < cover.list_size[v]; ++i) arr.push_back(name(v, i));
        nodes[g.id(v)] = arr;
    }
    auto links = nlohmann::json::array();
    for (const auto& l : cover.links) links.push_back({name(l.u, l.iu), name(l.v, l.iv)});
    nlohmann::json j;
    j["nodes"] = nodes;
    j["links"] = links;
    return j.dump();
}

Cover induced_cover(const Graph& g, const ListAssignment& L) {
    L.check_domain(g);
    Cover c;
    c.list_size.resize(g.n());
    for (int v = 0; v < g.n(); ++v) c.list_size[v] = static_cast<int>(L.lists[v].size());
    for (auto [u, v] : g.edge_list()) {
        for (int iu = 0; iu < c.list_size[u]; ++iu)
            for (int iv = 0; iv < c.list_size[v]; ++iv)
                if (L.lists[u][iu] == L.lists[v][iv]) c.links.push_back({u, iu, v, iv});
    }
    return c;
}

// --- solvers ---

std::optional<std::vector<int>> solve_list_colouring(const Graph& g, const ListAssignment& L) {
    L.check_domain(g);
    int n = g.n();
    std::map<std::string, int> token_id;
    std::vector<std::vector<int>> lists(n);
    for (int v = 0; v < n; ++v)
        for (const auto& t : L.lists[v])
            lists[v].push_back(
                token_id.emplace(t, static_cast<int>(token_id.size())).first->second);
    std::vector<int> chosen(n, -1);
    std::vector<bool> done(n, false);

    auto available = [&](int v, int c) {
        for (int w : g.neighbors(v))
            if (chosen[w] >= 0 && lists[w][chosen[w]] == c) return false;
        return true;
    };
    auto rec = [&](auto&& self, int left) -> bool {
        if (left == 0) return true;
        int best = -1, best_avail = -1;
        for (int v = 0; v < n; ++v) {
            if (done[v]) continue;
            int a = 0;
            for (int c : lists[v])
                if (available(v, c)) ++a;
            if (best < 0 || a < best_avail) {
                best = v;
                best_avail = a;
            }
            if (a == 0) break;
        }
        if (best_avail == 0) return false;
        done[best] = true;
        for (int i = 0; i < static_cast<int>(lists[best].size()); ++i) {
            if (!available(best, lists[best][i])) continue;
            chosen[best] = i;
            if (self(self, left - 1)) return true;
            chosen[best] = -1;
        }
        done[best] = false;
        return false;
    };
    if (!rec(rec, n)) return std::nullopt;
    return chosen;
}

std::optional<std::vector<int>> solve_cover_colouring(const Graph& g, const Cover& cover) {
    cover.check(g, false);
    int n = g.n();
    std::vector<std::vector<std::vector<std::pair<int, int>>>> conflicts(n);
    for (int v = 0; v < n; ++v) conflicts[v].resize(cover.list_size[v]);
    for (const auto& l : cover.links) {
        conflicts[l.u][l.iu].push_back({l.v, l.iv});
        conflicts[l.v][l.iv].push_back({l.u, l.iu});
    }
    std::vector<int> chosen(n, -1);
    std::vector<bool> done(n, false);

    auto allowed = [&](int v, int i) {
        for (auto [w, j] : conflicts[v][i])
            if (chosen[w] == j) return false;
        return true;
    };
    auto rec = [&](auto&& self, int left) -> bool {
        if (left == 0) return true;
        int best = -1, best_avail = -1;
        for (int v = 0; v < n; ++v) {
            if (done[v]) continue;
            int a = 0;
            for (int i = 0; i < cover.list_size[v]; ++i)
                if (allowed(v, i)) ++a;
            if (best < 0 || a < best_avail) {
                best = v;
                best_avail = a;
            }
            if (a == 0) break;
        }
        if (best_avail == 0) return false;
        done[best] = true;
        for (int i = 0; i < cover.list_size[best]; ++i) {
            if (!allowed(best, i)) continue;
            chosen[best] = i;
            if (self(self, left - 1)) return true;
            chosen[best] = -1;
        }
        done[best] = false;
        return false;
    };
    if (!rec(rec, n)) return std::nullopt;
    return chosen;
}

// --- choosability ---
//
// List assignments are enumerated vertex by vertex over a universe of at most
// sum f(v) colours. Colour symmetry is broken exactly: two used colours whose
// supports so far agree are interchangeable, so reuse is chosen per
// support-class (lowest members of each class), and fresh colours form one
// block. Three prunes keep the search exact but tractable:
//  * processed vertices have final lists, so an uncolourable processed
//    subgraph certifies a bad assignment outright (finish the coverage with
//    fresh private colours);
//  * if the processed part is colourable and the rest is recursively
//    (f - processed-degree)-choosable, every completion of the branch is
//    colourable, because each listed neighbour blocks at most one colour;
//  * vertices with more capacity than live neighbours peel off, and
//    components split.

namespace {

struct ChooseCtx {
    std::map<std::string, bool> memo;
    std::uint64_t budget;
    std::uint64_t steps = 0;
};

bool choosable_core(const Graph& g, const std::vector<std::int64_t>& f, ChooseCtx& ctx,
                    std::optional<ListAssignment>* witness);

struct ChoosabilitySearch {
    const Graph& g;
    const std::vector<std::int64_t>& f;
    ChooseCtx& ctx;
    std::vector<std::vector<int>> lists;      // per vertex, colour ids
    std::vector<std::uint32_t> support;       // per colour id, processed-vertex mask
    std::uint32_t processed = 0;
    std::optional<ListAssignment> witness;

    bool prefix_colourable() {
        std::vector<int> chosen(g.n(), -1);
        std::vector<int> verts;
        for (int v = 0; v < g.n(); ++v)
            if ((processed >> v) & 1) verts.push_back(v);
        auto rec = [&](auto&& self, std::size_t i) -> bool {
            if (i == verts.size()) return true;
            int v = verts[i];
            for (int c : lists[v]) {
                bool ok = true;
                for (int w : g.neighbors(v))
                    if (chosen[w] >= 0 && chosen[w] == c + 1) ok = false;
                if (!ok) continue;
                chosen[v] = c + 1;
                if (self(self, i + 1)) return true;
                chosen[v] = -1;
            }
            return false;
        };
        return rec(rec, 0);
    }

    bool all_colourable() {
        if (++ctx.steps > ctx.budget)
            throw resource_limit_error("choosability budget exhausted");
        if (!prefix_colourable()) {
            make_witness();
            return false;
        }
        int n = g.n();
        std::vector<int> open;
        for (int v = 0; v < n; ++v)
            if (!((processed >> v) & 1)) open.push_back(v);
        if (open.empty()) return true;
        // subtree prune
        if (processed) {
            std::vector<std::int64_t> r(open.size());
            bool positive = true;
            for (std::size_t i = 0; i < open.size(); ++i) {
                std::int64_t rv = f[open[i]];
                for (int w : g.neighbors(open[i]))
                    if ((processed >> w) & 1) --rv;
                r[i] = rv;
                if (rv <= 0) positive = false;
            }
            if (positive) {
                Graph sub = g.induced(open);
                std::vector<std::int64_t> rsub(sub.n());
                for (int v2 = 0; v2 < sub.n(); ++v2) {
                    int orig = g.index_of(sub.id(v2));
                    rsub[v2] = r[std::lower_bound(open.begin(), open.end(), orig) - open.begin()];
                }
                if (choosable_core(sub, rsub, ctx, nullptr)) return true;
            }
        }
        // next vertex: most processed neighbours, then highest degree (dense
        // remainders starve the subtree prune), then scarcest capacity
        int v = -1;
        {
            std::tuple<std::int64_t, int, std::int64_t> best{-1, 0, 0};
            for (int u : open) {
                std::int64_t closed_deg = 0;
                for (int w : g.neighbors(u))
                    if ((processed >> w) & 1) ++closed_deg;
                std::tuple<std::int64_t, int, std::int64_t> cand{closed_deg, g.degree(u), -f[u]};
                if (v < 0 || cand > best) {
                    v = u;
                    best = cand;
                }
            }
        }
        // group used colours by identical support
        std::map<std::uint32_t, std::vector<int>> classes;
        for (int c = 0; c < static_cast<int>(support.size()); ++c)
            classes[support[c]].push_back(c);
        std::vector<const std::vector<int>*> cls;
        for (auto& [mask, members] : classes) cls.push_back(&members);
        int fv = static_cast<int>(f[v]);
        // choose counts per class plus a fresh block, preferring heavy reuse
        std::vector<int> take(cls.size(), 0);
        auto choose = [&](auto&& self, std::size_t ci, int left) -> bool {
            if (ci == cls.size()) {
                auto& lv = lists[v];
                lv.clear();
                for (std::size_t i = 0; i < cls.size(); ++i)
                    for (int t = 0; t < take[i]; ++t) lv.push_back((*cls[i])[t]);
                int fresh_base = static_cast<int>(support.size());
                for (int t = 0; t < left; ++t) lv.push_back(fresh_base + t);
                // apply
                for (int t = 0; t < left; ++t) support.push_back(0);
                for (int c : lv) support[c] |= 1u << v;
                processed |= 1u << v;
                bool ok = all_colourable();
                processed &= ~(1u << v);
                for (int c : lv) support[c] &= ~(1u << v);
                support.resize(support.size() - left);
                lv.clear();
                return ok;
            }
            int cap = std::min<int>(left, static_cast<int>(cls[ci]->size()));
            for (int t = cap; t >= 0; --t) {
                take[ci] = t;
                if (!self(self, ci + 1, left - t)) return false;
            }
            take[ci] = 0;
            return true;
        };
        return choose(choose, 0, fv);
    }

    void make_witness() {
        ListAssignment L;
        L.lists.assign(g.n(), {});
        int fresh = static_cast<int>(support.size());
        for (int v = 0; v < g.n(); ++v) {
            if ((processed >> v) & 1) {
                for (int c : lists[v]) L.lists[v].push_back("c" + std::to_string(c));
            } else {
                for (std::int64_t t = 0; t < f[v]; ++t)
                    L.lists[v].push_back("c" + std::to_string(fresh++));
            }
        }
        witness = std::move(L);
    }
};

bool choosable_core(const Graph& g, const std::vector<std::int64_t>& f, ChooseCtx& ctx,
                    std::optional<ListAssignment>* witness) {
    int n = g.n();
    for (int v = 0; v < n; ++v)
        if (f[v] <= 0) {
            if (witness) {
                ListAssignment L;
                L.lists.assign(n, {});
                int fresh = 0;
                for (int w = 0; w < n; ++w)
                    for (std::int64_t i = 0; i < f[w]; ++i)
                        L.lists[w].push_back("c" + std::to_string(fresh++));
                *witness = std::move(L);
            }
            return false;
        }
    // peel vertices with more colours than live neighbours
    std::vector<int> alive;
    for (int v = 0; v < n; ++v) alive.push_back(v);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < alive.size(); ++i) {
            int v = alive[i];
            int d = 0;
            for (int w : g.neighbors(v))
                if (std::find(alive.begin(), alive.end(), w) != alive.end()) ++d;
            if (f[v] > d) {
                alive.erase(alive.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    Graph core = g;
    std::vector<std::int64_t> fcore = f;
    if (alive.size() < static_cast<std::size_t>(n)) {
        core = g.induced(alive);
        fcore.resize(core.n());
        for (int v2 = 0; v2 < core.n(); ++v2) fcore[v2] = f[g.index_of(core.id(v2))];
    }
    if (core.n() == 0) return true;

    auto comps = core.components();
    if (comps.size() > 1) {
        for (const auto& comp : comps) {
            Graph sub = core.induced(comp);
            std::vector<std::int64_t> fsub(sub.n());
            for (int v2 = 0; v2 < sub.n(); ++v2) fsub[v2] = fcore[core.index_of(sub.id(v2))];
            std::optional<ListAssignment> w;
            if (!choosable_core(sub, fsub, ctx, witness ? &w : nullptr)) {
                if (witness) {
                    ListAssignment L;
                    L.lists.assign(n, {});
                    for (int v2 = 0; v2 < sub.n(); ++v2)
                        L.lists[g.index_of(sub.id(v2))] = w->lists[v2];
                    int fresh = 0;
                    for (int v = 0; v < n; ++v)
                        if (L.lists[v].empty())
                            for (std::int64_t i = 0; i < f[v]; ++i)
                                L.lists[v].push_back("fresh" + std::to_string(fresh++));
                    *witness = std::move(L);
                }
                return false;
            }
        }
        return true;
    }

    std::string key;
    {
        SmallGraph sg = SmallGraph::from_graph(core);
        key = canonical_form(sg, fcore).certificate;
        auto it = ctx.memo.find(key);
        if (it != ctx.memo.end() && (it->second || witness == nullptr)) return it->second;
    }
    ChoosabilitySearch search{core, fcore, ctx, {}, {}, 0, std::nullopt};
    search.lists.assign(core.n(), {});
    bool ok = search.all_colourable();
    ctx.memo[key] = ok;
    if (!ok && witness != nullptr) {
        ListAssignment L;
        L.lists.assign(n, {});
        for (int v2 = 0; v2 < core.n(); ++v2)
            L.lists[g.index_of(core.id(v2))] = search.witness->lists[v2];
        int fresh = 0;
        for (int v = 0; v < n; ++v)
            if (L.lists[v].empty())
                for (std::int64_t i = 0; i < f[v]; ++i)
                    L.lists[v].push_back("fresh" + std::to_string(fresh++));
        *witness = std::move(L);
    }
    return ok;
}

}  // namespace

ChoosabilityResult is_f_choosable(const Graph& g, const CapMap& f, std::uint64_t budget) {
    f.check_domain(g);
    int n = g.n();
    if (n == 0) return {true, std::nullopt};
    if (n > 20) throw resource_limit_error("choosability oracle supports n <= 20");
    ChooseCtx ctx{{}, budget, 0};
    std::optional<ListAssignment> witness;
    if (choosable_core(g, f.values, ctx, &witness)) return {true, std::nullopt};
    if (solve_list_colouring(g, *witness))
        throw graph_error("internal: choosability witness re-check failed");
    return {false, std::move(witness)};
}

// --- DP colourability ---

namespace {

struct DpSearch {
    const Graph& g;
    const std::vector<std::int64_t>& f;
    std::vector<std::pair<int, int>> edges;  // tree edges first
    int tree_count = 0;
    std::uint64_t budget;
    std::uint64_t steps = 0;
    Cover cover;
    std::optional<Cover> witness;

    // enumerate maximum matchings edge by edge; true = every cover colourable
    bool run(int ei) {
        if (++steps > budget) throw resource_limit_error("DP-colourability budget exhausted");
        if (ei == static_cast<int>(edges.size())) {
            if (solve_cover_colouring(g, cover)) return true;
            witness = cover;
            return false;
        }
        auto [u, v] = edges[ei];
        int fu = static_cast<int>(f[u]), fv = static_cast<int>(f[v]);
        int k = std::min(fu, fv);
        std::size_t mark = cover.links.size();
        if (ei < tree_count) {
            // child node labels are free to permute: pair each sorted k-subset
            // of u's nodes with v's nodes 0..k-1 in order
            std::vector<int> comb(k);
            for (int i = 0; i < k; ++i) comb[i] = i;
            for (;;) {
                for (int i = 0; i < k; ++i) cover.links.push_back({u, comb[i], v, i});
                bool ok = run(ei + 1);
                cover.links.resize(mark);
                if (!ok) return false;
                int i = k - 1;
                while (i >= 0 && comb[i] == fu - k + i) --i;
                if (i < 0) break;
                ++comb[i];
                for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
        // free edge: all maximum matchings
        bool u_small = fu <= fv;
        int small = u_small ? fu : fv, large = u_small ? fv : fu;
        std::vector<int> image(small, -1);
        std::vector<bool> used(large, false);
        auto rec = [&](auto&& self, int i) -> bool {
            if (i == small) {
                for (int a = 0; a < small; ++a)
                    cover.links.push_back(u_small ? Cover::Link{u, a, v, image[a]}
                                                  : Cover::Link{u, image[a], v, a});
                bool ok = run(ei + 1);
                cover.links.resize(mark);
                return ok;
            }
            for (int b = 0; b < large; ++b) {
                if (used[b]) continue;
                used[b] = true;
                image[i] = b;
                bool ok = self(self, i + 1);
                used[b] = false;
                if (!ok) return false;
            }
            return true;
        };
        return rec(rec, 0);
    }
};

}  // namespace

DpColourabilityResult is_dp_f_colourable(const Graph& g, const CapMap& f, std::uint64_t budget) {
    f.check_domain(g);
    int n = g.n();
    if (n == 0) return {true, std::nullopt};
    for (int v = 0; v < n; ++v)
        if (f[v] == 0) {
            Cover c;
            c.list_size.resize(n);
            for (int w = 0; w < n; ++w) c.list_size[w] = static_cast<int>(f[w]);
            return {false, c};
        }
    // in a simple cover each coloured neighbour blocks at most one node, so
    // f(v) > d(v) makes v irrelevant
    std::vector<int> alive;
    for (int v = 0; v < n; ++v) alive.push_back(v);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < alive.size(); ++i) {
            int v = alive[i];
            int d = 0;
            for (int w : g.neighbors(v))
                if (std::find(alive.begin(), alive.end(), w) != alive.end()) ++d;
            if (f[v] > d) {
                alive.erase(alive.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    if (alive.size() < static_cast<std::size_t>(n)) {
        Graph h = g.induced(alive);
        CapMap fh;
        for (int v2 = 0; v2 < h.n(); ++v2) fh.values.push_back(f[g.index_of(h.id(v2))]);
        auto sub = is_dp_f_colourable(h, fh, budget);
        if (sub.colourable) return {true, std::nullopt};
        Cover c;
        c.list_size.resize(n);
        for (int v = 0; v < n; ++v) c.list_size[v] = static_cast<int>(f[v]);
        for (const auto& l : sub.witness->links)
            c.links.push_back({g.index_of(h.id(l.u)), l.iu, g.index_of(h.id(l.v)), l.iv});
        return {false, c};
    }

    DpSearch search{g, f.values, {}, 0, budget, 0, {}, std::nullopt};
    {
        std::vector<bool> seen(n, false);
        for (int root = 0; root < n; ++root) {
            if (seen[root]) continue;
            seen[root] = true;
            std::vector<int> queue{root};
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                int u = queue[qi];
                for (int w : g.neighbors(u))
                    if (!seen[w]) {
                        seen[w] = true;
                        search.edges.emplace_back(u, w);
                        queue.push_back(w);
                    }
            }
        }
        search.tree_count = static_cast<int>(search.edges.size());
        std::set<std::pair<int, int>> tree(search.edges.begin(), search.edges.end());
        for (auto [u, v] : g.edge_list())
            if (!tree.count({u, v}) && !tree.count({v, u})) search.edges.emplace_back(u, v);
    }
    search.cover.list_size.resize(n);
    for (int v = 0; v < n; ++v) search.cover.list_size[v] = static_cast<int>(f[v]);
    if (search.run(0)) return {true, std::nullopt};
    search.witness->check(g, true);
    if (solve_cover_colouring(g, *search.witness))
        throw graph_error("internal: DP witness re-check failed");
    return {false, std::move(search.witness)};
}

// --- painting games ---

namespace {

std::string paint_key(const Graph& g, std::uint32_t alive, const std::vector<std::int64_t>& caps) {
    std::vector<int> verts;
    for (int v = 0; v < g.n(); ++v)
        if ((alive >> v) & 1) verts.push_back(v);
    SmallGraph sub;
    sub.n = static_cast<int>(verts.size());
    sub.adj.assign(sub.n, 0);
    std::vector<std::int64_t> cs(sub.n);
    for (int i = 0; i < sub.n; ++i) {
        cs[i] = caps[verts[i]];
        for (int j = i + 1; j < sub.n; ++j)
            if (g.has_edge(verts[i], verts[j])) sub.add_edge(i, j);
    }
    return canonical_form(sub, cs).certificate;
}

bool tokens_cover_degrees(const Graph& g, std::uint32_t alive,
                          const std::vector<std::int64_t>& caps) {
    for (int v = 0; v < g.n(); ++v) {
        if (!((alive >> v) & 1)) continue;
        int d = 0;
        for (int w : g.neighbors(v))
            if ((alive >> w) & 1) ++d;
        if (caps[v] < d + 1) return false;
    }
    return true;
}

struct PaintGame {
    const Graph& g;
    std::map<std::string, bool> memo;

    bool painter_wins(std::uint32_t alive, std::vector<std::int64_t> caps) {
        if (!alive) return true;
        for (int v = 0; v < g.n(); ++v)
            if (((alive >> v) & 1) && caps[v] <= 0) return false;
        if (tokens_cover_degrees(g, alive, caps)) return true;
        auto key = paint_key(g, alive, caps);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool res = true;
        std::vector<int> verts;
        for (int v = 0; v < g.n(); ++v)
            if ((alive >> v) & 1) verts.push_back(v);
        int k = static_cast<int>(verts.size());
        for (std::uint32_t pick = 1; pick < (1u << k) && res; ++pick) {
            std::uint32_t s_mask = 0;
            for (int i = 0; i < k; ++i)
                if ((pick >> i) & 1) s_mask |= 1u << verts[i];
            bool painter_ok = false;
            // Painter: maximal independent subsets of G[S]
            for (std::uint32_t xs = s_mask;; xs = (xs - 1) & s_mask) {
                if (xs) {
                    bool indep = true;
                    for (int v = 0; v < g.n() && indep; ++v) {
                        if (!((xs >> v) & 1)) continue;
                        for (int w : g.neighbors(v))
                            if ((xs >> w) & 1) indep = false;
                    }
                    bool maximal = indep;
                    for (int v = 0; v < g.n() && maximal; ++v) {
                        if (!((s_mask >> v) & 1) || ((xs >> v) & 1)) continue;
                        bool free = true;
                        for (int w : g.neighbors(v))
                            if ((xs >> w) & 1) free = false;
                        if (free) maximal = false;
                    }
                    if (indep && maximal) {
                        auto next = caps;
                        for (int v = 0; v < g.n(); ++v)
                            if ((s_mask >> v) & 1) next[v] -= 1;
                        if (painter_wins(alive & ~xs, std::move(next))) {
                            painter_ok = true;
                            break;
                        }
                    }
                }
                if (!xs) break;
            }
            if (!painter_ok) res = false;
        }
        memo[key] = res;
        return res;
    }
};

struct DpPaintGame {
    const Graph& g;
    std::map<std::string, bool> memo;
    std::uint64_t steps = 0;
    std::uint64_t budget = 4'000'000'000ull;

    bool painter_wins(std::uint32_t alive, std::vector<std::int64_t> caps) {
        if (!alive) return true;
        for (int v = 0; v < g.n(); ++v)
            if (((alive >> v) & 1) && caps[v] <= 0) return false;
        if (tokens_cover_degrees(g, alive, caps)) return true;
        auto key = paint_key(g, alive, caps);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        std::vector<int> verts;
        for (int v = 0; v < g.n(); ++v)
            if ((alive >> v) & 1) verts.push_back(v);
        int k = static_cast<int>(verts.size());
        std::vector<std::pair<int, int>> live_edges;  // indices into verts
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (g.has_edge(verts[i], verts[j])) live_edges.emplace_back(i, j);
        std::vector<std::int64_t> gcap(k);
        for (int i = 0; i < k; ++i) {
            std::int64_t d = 0;
            for (int j = 0; j < k; ++j)
                if (g.has_edge(verts[i], verts[j])) ++d;
            gcap[i] = std::min(caps[verts[i]], d + 1);
        }

        bool res = true;
        std::vector<std::int64_t> gv(k, 0);
        auto next_g = [&]() {
            int i = 0;
            while (i < k) {
                if (gv[i] == gcap[i]) {
                    gv[i++] = 0;
                } else {
                    ++gv[i];
                    return true;
                }
            }
            return false;
        };
        while (res && next_g()) {
            if (lister_move_wins(alive, caps, verts, live_edges, gv)) res = false;
        }
        memo[key] = res;
        return res;
    }

    // true when this Lister move beats every Painter reply under some cover
    bool lister_move_wins(std::uint32_t alive, const std::vector<std::int64_t>& caps,
                          const std::vector<int>& verts,
                          const std::vector<std::pair<int, int>>& live_edges,
                          const std::vector<std::int64_t>& gv) {
        int k = static_cast<int>(verts.size());
        // cover enumeration over edges with nodes on both sides: maximum
        // matchings; a BFS forest is normalized to identity pairings
        std::vector<std::pair<int, int>> edges;
        std::vector<bool> seen(k, false);
        for (int root = 0; root < k; ++root) {
            if (seen[root] || gv[root] == 0) continue;
            seen[root] = true;
            std::vector<int> queue{root};
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                int u = queue[qi];
                for (auto [a, b] : live_edges) {
                    int other = -1;
                    if (a == u) other = b;
                    if (b == u) other = a;
                    if (other < 0 || seen[other] || gv[other] == 0) continue;
                    seen[other] = true;
                    edges.emplace_back(u, other);
                    queue.push_back(other);
                }
            }
        }
        int tree_count = static_cast<int>(edges.size());
        std::set<std::pair<int, int>> tree(edges.begin(), edges.end());
        for (auto [a, b] : live_edges) {
            if (gv[a] == 0 || gv[b] == 0) continue;
            if (!tree.count({a, b}) && !tree.count({b, a})) edges.emplace_back(a, b);
        }
        std::vector<Cover::Link> links;
        return enumerate_covers(alive, caps, verts, gv, edges, tree_count, 0, links);
    }

    bool enumerate_covers(std::uint32_t alive, const std::vector<std::int64_t>& caps,
                          const std::vector<int>& verts, const std::vector<std::int64_t>& gv,
                          const std::vector<std::pair<int, int>>& edges, int tree_count, int ei,
                          std::vector<Cover::Link>& links) {
        if (++steps > budget) throw resource_limit_error("DP-paintability budget exhausted");
        if (ei == static_cast<int>(edges.size()))
            return !painter_has_reply(alive, caps, verts, gv, links);
        auto [u, v] = edges[ei];
        int fu = static_cast<int>(gv[u]), fv = static_cast<int>(gv[v]);
        int m = std::min(fu, fv);
        std::size_t mark = links.size();
        if (ei < tree_count) {
            std::vector<int> comb(m);
            for (int i = 0; i < m; ++i) comb[i] = i;
            for (;;) {
                for (int i = 0; i < m; ++i) links.push_back({u, comb[i], v, i});
                bool win = enumerate_covers(alive, caps, verts, gv, edges, tree_count, ei + 1,
                                            links);
                links.resize(mark);
                if (win) return true;
                int i = m - 1;
                while (i >= 0 && comb[i] == fu - m + i) --i;
                if (i < 0) break;
                ++comb[i];
                for (int j = i + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
            }
            return false;
        }
        bool u_small = fu <= fv;
        int small = u_small ? fu : fv, large = u_small ? fv : fu;
        std::vector<int> image(small, -1);
        std::vector<bool> used(large, false);
        auto rec = [&](auto&& self, int i) -> bool {
            if (i == small) {
                for (int a = 0; a < small; ++a)
                    links.push_back(u_small ? Cover::Link{u, a, v, image[a]}
                                            : Cover::Link{u, image[a], v, a});
                bool win =
                    enumerate_covers(alive, caps, verts, gv, edges, tree_count, ei + 1, links);
                links.resize(mark);
                return win;
            }
            for (int b = 0; b < large; ++b) {
                if (used[b]) continue;
                used[b] = true;
                image[i] = b;
                bool win = self(self, i + 1);
                used[b] = false;
                if (win) return true;
            }
            return false;
        };
        return rec(rec, 0);
    }

    // Painter replies with greedily-maximal partial colourings of the cover
    bool painter_has_reply(std::uint32_t alive, const std::vector<std::int64_t>& caps,
                           const std::vector<int>& verts, const std::vector<std::int64_t>& gv,
                           const std::vector<Cover::Link>& links) {
        int k = static_cast<int>(verts.size());
        std::set<std::uint32_t> tried;
        std::vector<int> chosen(k, -1);
        auto blocked = [&](int i, int node) {
            for (const auto& l : links) {
                if (l.u == i && chosen[l.v] == l.iv && l.iu == node) return true;
                if (l.v == i && chosen[l.u] == l.iu && l.iv == node) return true;
            }
            return false;
        };
        auto rec = [&](auto&& self, int i) -> bool {
            if (++steps > budget) throw resource_limit_error("DP-paintability budget exhausted");
            if (i == k) {
                std::uint32_t xs = 0;
                for (int j = 0; j < k; ++j)
                    if (chosen[j] >= 0) xs |= 1u << j;
                for (int j = 0; j < k; ++j) {
                    if (chosen[j] >= 0) continue;
                    for (int node = 0; node < gv[j]; ++node)
                        if (!blocked(j, node)) return false;  // extendable: not maximal
                }
                if (!tried.insert(xs).second) return false;
                std::uint32_t next_alive = alive;
                auto next_caps = caps;
                for (int j = 0; j < k; ++j) {
                    if ((xs >> j) & 1) next_alive &= ~(1u << verts[j]);
                    next_caps[verts[j]] -= gv[j];
                }
                return painter_wins(next_alive, std::move(next_caps));
            }
            for (int node = 0; node < gv[i]; ++node) {
                if (blocked(i, node)) continue;
                chosen[i] = node;
                if (self(self, i + 1)) return true;
            }
            chosen[i] = -1;
            return self(self, i + 1);
        };
        return rec(rec, 0);
    }
};

}  // namespace

bool decide_paintable(const Graph& g, const CapMap& f) {
    f.check_domain(g);
    if (g.n() > 20) throw resource_limit_error("paintability oracle supports small graphs only");
    PaintGame game{g, {}};
    std::uint32_t alive = g.n() == 0 ? 0 : (1u << g.n()) - 1;
    return game.painter_wins(alive, f.values);
}

bool decide_dp_paintable(const Graph& g, const CapMap& f) {
    f.check_domain(g);
    if (g.n() > 16)
        throw resource_limit_error("DP-paintability oracle supports small graphs only");
    DpPaintGame game{g, {}};
    std::uint32_t alive = g.n() == 0 ? 0 : (1u << g.n()) - 1;
    return game.painter_wins(alive, f.values);
}

int parameter(const Graph& g, ColouringParameter which) {
    if (g.n() == 0) return 0;
    for (int k = 1; k <= g.n() + 1; ++k) {
        CapMap f = CapMap::constant(g, k);
        bool ok = false;
        switch (which) {
            case ColouringParameter::Choice: ok = is_f_choosable(g, f).choosable; break;
            case ColouringParameter::DpChromatic: ok = is_dp_f_colourable(g, f).colourable; break;
            case ColouringParameter::Paint: ok = decide_paintable(g, f); break;
            case ColouringParameter::DpPaint: ok = decide_dp_paintable(g, f); break;
        }
        if (ok) return k;
    }
    throw graph_error("internal: parameter exceeded n + 1");
}

}  // namespace wstar
