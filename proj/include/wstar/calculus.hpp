#ifndef WSTAR_CALCULUS_HPP
#define WSTAR_CALCULUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wstar/graph.hpp"

namespace wstar {

enum class OpKind { ReduceValue, EdgeDelete, VertexDelete, DeleteSave };

/// One move of the reduction calculus. For EdgeDelete and DeleteSave the
/// order matters: x pays, y is the reference.
struct Operation {
    OpKind kind;
    std::string x;
    std::string y;          // EdgeDelete / DeleteSave only
    std::int64_t s = 0;     // ReduceValue only, >= 1

    static Operation reduce(std::string x, std::int64_t s) {
        return {OpKind::ReduceValue, std::move(x), "", s};
    }
    static Operation edge_delete(std::string x, std::string y) {
        return {OpKind::EdgeDelete, std::move(x), std::move(y), 0};
    }
    static Operation vertex_delete(std::string x) {
        return {OpKind::VertexDelete, std::move(x), "", 0};
    }
    static Operation delete_save(std::string x, std::string y) {
        return {OpKind::DeleteSave, std::move(x), std::move(y), 0};
    }
    bool operator==(const Operation&) const = default;
};

/// A (graph, capacities) pair. The empty state has no vertices.
struct OpState {
    Graph graph;
    CapMap caps;

    bool empty() const { return graph.n() == 0; }
};

struct Certificate {
    std::string initial_graph6;  // graph6 of the initial graph
    CapMap initial_caps;         // aligned to the initial graph's vertex order
    std::vector<Operation> ops;
};

Certificate make_certificate(const Graph& g, const CapMap& f, std::vector<Operation> ops);

/// Certificate JSONL: header {"graph": g6, "caps": {...}}, then one op per line.
std::string certificate_to_jsonl(const Graph& g, const Certificate& cert);
Certificate certificate_from_jsonl(const Graph& g, const std::string& text);

struct op_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Applies one operation. Throws op_error when the operation is illegal
/// (naming the failed precondition), references an unknown vertex, or a
/// missing edge. Capacities stay nonnegative: a vertex deletion whose
/// neighbour has no capacity left is illegal.
OpState apply_op(const OpState& state, const Operation& op);

struct Reject {
    int step;  // 1-based index of the failing op; ops.size()+1 for a bad final state
    std::string reason;
};

struct VerifyResult {
    bool accepted;
    std::optional<Reject> reject;
};

enum class VerifyMode { Full, Prefix };

VerifyResult verify_certificate(const Graph& g, const CapMap& f, const Certificate& cert,
                                VerifyMode mode = VerifyMode::Full);

/// Exact decision procedures. Unknown is only returned on budget exhaustion
/// and is never conflated with No.
struct DecideYes {
    Certificate cert;
};
struct DecideNo {};
struct DecideUnknown {
    std::uint64_t budget;
};
using DecideResult = std::variant<DecideYes, DecideNo, DecideUnknown>;

inline bool is_yes(const DecideResult& r) { return std::holds_alternative<DecideYes>(r); }
inline bool is_no(const DecideResult& r) { return std::holds_alternative<DecideNo>(r); }
inline bool is_unknown(const DecideResult& r) { return std::holds_alternative<DecideUnknown>(r); }

struct SearchOptions {
    std::uint64_t node_budget = 10'000'000;
    bool canonical_memo = true;  // canonical (G,f) memo keys; exact-labelled otherwise
    bool fused_reduce = true;    // explore ReduceValue only fused with an EdgeDelete
};

/// Default budget, overridable with the WEAKSTAR_BUDGET environment variable.
SearchOptions default_search_options();

/// Is (G,f) reducible to the empty pair by legal ReduceValue / EdgeDelete /
/// VertexDelete moves? Exhaustive memoized search; yes answers carry a
/// verifying certificate.
DecideResult decide_weak_star(const Graph& g, const CapMap& f,
                              const SearchOptions& opt = default_search_options());

/// Same with moves restricted to VertexDelete and DeleteSave.
DecideResult decide_strict_weak(const Graph& g, const CapMap& f,
                                const SearchOptions& opt = default_search_options());

/// Least d such that G is weak* d-degenerate.
struct DegeneracyResult {
    std::optional<int> value;       // nullopt on budget exhaustion
    std::optional<Certificate> cert;
};
DegeneracyResult weak_star_degeneracy(const Graph& g,
                                      const SearchOptions& opt = default_search_options());

/// Greedy strict f-degeneracy: repeatedly remove any vertex v with
/// d(v) < f(v); yes iff the graph empties. The ordering witnesses the acyclic
/// orientation (edges from later to earlier removal).
std::optional<std::vector<int>> decide_strict_degenerate(const Graph& g, const CapMap& f);

/// Lemma-2.1-style split: X with G[X] weak* g-degenerate and G-X weak*
/// (f-g)-degenerate, both with verifying certificates, extracted from a
/// certificate for (G,f).
struct SplitResult {
    std::vector<int> x_vertices;  // indices into g's vertex order
    Certificate cert_x;
    Certificate cert_rest;
};
SplitResult certificate_split(const Graph& g, const CapMap& f, const CapMap& gmap,
                              const Certificate& cert);

/// Canonical form: drops ReduceValue ops never used to cheapen a later
/// EdgeDelete reference and moves the kept ones directly before the
/// EdgeDelete batch they serve. Output verifies the same pair.
Certificate normalize_certificate(const Graph& g, const CapMap& f, const Certificate& cert);

/// Incremental replay of operations against a live state. Used by the
/// certificate-constructing procedures so every emitted move is checked for
/// legality the moment it is produced.
class CertBuilder {
public:
    CertBuilder(const Graph& g, CapMap f);

    void apply(const Operation& op);  // throws op_error on an illegal move
    bool done() const;                // all vertices deleted
    bool alive(int v) const { return alive_[v]; }
    std::int64_t cap(int v) const { return caps_[v]; }
    bool edge_alive(int u, int v) const;
    std::vector<int> live_neighbors(int v) const;
    int live_degree(int v) const;
    int steps() const { return static_cast<int>(ops_.size()); }
    const std::vector<Operation>& ops() const { return ops_; }
    std::vector<Operation> take_ops() { return std::move(ops_); }

private:
    const Graph& g_;
    std::vector<bool> alive_;
    std::vector<std::int64_t> caps_;
    std::set<std::pair<int, int>> removed_edges_;
    std::vector<Operation> ops_;
    int live_count_ = 0;
};

}  // namespace wstar

#endif
