#ifndef WSTAR_COLORING_HPP
#define WSTAR_COLORING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wstar/graph.hpp"

namespace wstar {

/// Colour lists per vertex. Tokens are opaque strings with a total order.
struct ListAssignment {
    std::vector<std::vector<std::string>> lists;  // aligned to graph vertex order

    void check_domain(const Graph& g) const;
};

ListAssignment lists_from_json(const Graph& g, const std::string& text);
std::string lists_to_json(const Graph& g, const ListAssignment& L);

/// Cover (L,M): node sets per vertex and per-edge link sets. Nodes are
/// numbered 0..size-1 within each vertex; links join (u, node) to (v, node).
struct Cover {
    struct Link {
        int u, iu;  // node iu of vertex u
        int v, iv;  // node iv of vertex v
    };
    std::vector<int> list_size;  // aligned to graph vertex order
    std::vector<Link> links;

    void check(const Graph& g, bool require_simple) const;  // throws graph_error
    bool is_simple(const Graph& g) const;
};

Cover cover_from_json(const Graph& g, const std::string& text);
std::string cover_to_json(const Graph& g, const Cover& cover);

/// The simple cover induced by a list assignment: nodes (i,v) for i in L'(v),
/// links between equal colours on edges.
Cover induced_cover(const Graph& g, const ListAssignment& L);

/// Exact backtracking solver; colours indexed into each vertex's list.
std::optional<std::vector<int>> solve_list_colouring(const Graph& g, const ListAssignment& L);

/// Exact solver for (L,M)-colourings: one node per vertex avoiding links.
std::optional<std::vector<int>> solve_cover_colouring(const Graph& g, const Cover& cover);

struct ChoosabilityResult {
    bool choosable;
    std::optional<ListAssignment> witness;  // non-colourable assignment when false
};

/// Enumerates f-list assignments over a universe of size sum f(v), modulo
/// colour renaming (multisets of connected colour supports); exact.
ChoosabilityResult is_f_choosable(const Graph& g, const CapMap& f,
                                  std::uint64_t budget = 200'000'000);

struct DpColourabilityResult {
    bool colourable;
    std::optional<Cover> witness;  // bad simple cover when false
};

/// Enumerates simple f-covers up to per-vertex node relabelling (maximum
/// matchings on each edge, spanning-tree edges normalized); exact.
DpColourabilityResult is_dp_f_colourable(const Graph& g, const CapMap& f,
                                         std::uint64_t budget = 200'000'000);

/// Painter-vs-Lister token games (Lemma-2.2 recursions), exact with
/// memoization. decide_paintable restricts Lister to g(v) <= 1.
bool decide_paintable(const Graph& g, const CapMap& f);
bool decide_dp_paintable(const Graph& g, const CapMap& f);

enum class ColouringParameter { Choice, DpChromatic, Paint, DpPaint };

/// Least constant k with the corresponding decision true.
int parameter(const Graph& g, ColouringParameter which);

}  // namespace wstar

#endif
