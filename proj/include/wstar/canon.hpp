#ifndef WSTAR_CANON_HPP
#define WSTAR_CANON_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wstar/graph.hpp"

namespace wstar {

/// Compact mutable graph for search code; n <= 64, adjacency as bitmasks.
struct SmallGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;  // adj[v] bit w set iff edge vw

    static SmallGraph from_graph(const Graph& g);
    void add_edge(int u, int v) {
        adj[u] |= 1ull << v;
        adj[v] |= 1ull << u;
    }
    void remove_edge(int u, int v) {
        adj[u] &= ~(1ull << v);
        adj[v] &= ~(1ull << u);
    }
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    int degree(int v) const { return __builtin_popcountll(adj[v]); }
};

/// Canonical labelling of (graph, vertex colours) by colour refinement plus
/// backtracking over cell splits; returns the relabelling old->new realizing
/// the lexicographically smallest (colour string, adjacency bits) certificate.
/// Two inputs get equal certificates iff they are isomorphic respecting
/// colours.
struct CanonResult {
    std::vector<int> relabel;  // relabel[old] = new
    std::string certificate;   // canonical key
};

CanonResult canonical_form(const SmallGraph& g, const std::vector<std::int64_t>& colours);

/// Canonical key of the bare graph (all colours equal).
std::string canonical_key(const SmallGraph& g);

/// All connected graphs with exactly n vertices, one per isomorphism class,
/// as Graphs with ids "0".."n-1".
std::vector<Graph> connected_graphs(int n);

/// All graphs with exactly m edges and no isolated vertices, one per
/// isomorphism class.
std::vector<Graph> graphs_with_edges(int m);

}  // namespace wstar

#endif
