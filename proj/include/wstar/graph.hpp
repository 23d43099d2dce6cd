#ifndef WSTAR_GRAPH_HPP
#define WSTAR_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wstar {

struct graph_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an exact oracle exceeds its configured instance-size budget.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Deterministic total order on vertex ids: shorter first, then lexicographic.
/// Makes "0","1",...,"9","10",... come out in numeric order.
bool id_less(const std::string& a, const std::string& b);

/// Finite simple undirected graph with stable string vertex ids.
/// Vertices are stored sorted by id_less; all index-based accessors refer to
/// that order. Immutable after construction.
class Graph {
public:
    Graph() = default;
    static Graph from_edges(std::vector<std::string> vertex_ids,
                            const std::vector<std::pair<std::string, std::string>>& edges);

    int n() const { return static_cast<int>(ids_.size()); }
    int m() const { return m_; }
    const std::string& id(int v) const { return ids_[v]; }
    const std::vector<std::string>& ids() const { return ids_; }
    int index_of(const std::string& id) const;      // -1 if absent
    bool has_vertex(const std::string& id) const { return index_of(id) >= 0; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    /// Every edge once, u < v.
    std::vector<std::pair<int, int>> edge_list() const;

    /// Induced subgraph on the given vertex indices (ids preserved).
    Graph induced(const std::vector<int>& vertices) const;
    Graph remove_vertex(int v) const;

    std::vector<int> component_of(int v) const;
    std::vector<std::vector<int>> components() const;
    bool is_connected() const;
    bool is_complete() const;
    bool is_cycle_graph() const;

    std::vector<bool> articulation_points() const;
    bool is_biconnected() const;   // n >= 3, connected, no cut vertex
    bool is_three_connected() const;
    /// Exact vertex connectivity >= k test (unit-capacity max-flow, Even-Tarjan
    /// pair reduction).
    bool is_k_connected(int k) const;

private:
    std::vector<std::string> ids_;
    std::map<std::string, int, bool (*)(const std::string&, const std::string&)> index_{id_less};
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

/// Per-vertex nonnegative integer capacities, aligned to a Graph's vertex order.
struct CapMap {
    std::vector<std::int64_t> values;

    static CapMap constant(const Graph& g, std::int64_t k);
    static CapMap degrees(const Graph& g);

    std::int64_t operator[](int v) const { return values[v]; }
    std::int64_t& operator[](int v) { return values[v]; }
    int size() const { return static_cast<int>(values.size()); }
    bool operator==(const CapMap&) const = default;

    void check_domain(const Graph& g) const;  // throws graph_error on mismatch
};

/// f(v) = min{k, d(v)}.
CapMap truncated_cap(const Graph& g, std::int64_t k);

// --- serialization ---

/// Accepts graph6 or the JSON form {"vertices":[ids],"edges":[[id,id]]}.
Graph parse_graph(const std::string& text);
Graph parse_graph6(const std::string& text);
Graph parse_graph_json(const std::string& text);
std::string to_graph6(const Graph& g);
std::string to_graph_json(const Graph& g);

std::string caps_to_json(const Graph& g, const CapMap& f);
CapMap caps_from_json(const Graph& g, const std::string& text);

// --- block structure ---

struct BlockTree {
    std::vector<std::vector<int>> blocks;   // vertex sets, each sorted
    std::vector<int> cut_vertices;          // sorted
    /// blocks with at most one cut vertex; parallel array of optional roots
    std::vector<int> leaf_blocks;           // indices into blocks
    std::vector<int> leaf_roots;            // cut vertex of that leaf block, or -1
};

BlockTree block_decomposition(const Graph& g);

/// Every block a complete graph or an odd cycle. Throws on disconnected input.
bool is_gallai_tree(const Graph& g);
/// Every block a complete graph or a cycle. Throws on disconnected input.
bool is_gdp_tree(const Graph& g);

/// Repeatedly removes a minimum-degree vertex (ties by vertex id order);
/// fails iff some subgraph has minimum degree > cap. Every vertex has at most
/// `cap` neighbours earlier in the returned ordering. With
/// component_consecutive, each connected component's vertices are consecutive.
std::optional<std::vector<int>> degeneracy_ordering(const Graph& g, int cap,
                                                    bool component_consecutive = false);

}  // namespace wstar

#endif
