#pragma once

// Isomorphism classes of finite simple graphs and the double bialgebra they
// span: disjoint union, the subset coproduct Delta, and the
// contraction-restriction coproduct delta.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dbialg/lincomb.hpp"

namespace dbialg {

struct MalformedGraph : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Unordered vertex pair; stored with first < second once validated.
using Edge = std::pair<int, int>;

/// Hard limit of the 64-bit edge encoding (C(11,2) = 55 bits).
inline constexpr int kMaxGraphVertices = 11;

/// Bit position of the pair {i, j}, i < j.
constexpr int edge_bit(int i, int j) { return j * (j - 1) / 2 + i; }

/// A graph on vertices 0..n-1 with an arbitrary labeling.
struct LabeledGraph {
    int n = 0;
    std::uint64_t edges = 0;

    bool has_edge(int i, int j) const;
    /// Neighborhood bitmask of v.
    std::uint32_t neighbors(int v) const;
    int edge_count() const;
    std::vector<Edge> edge_list() const;
};

/// Canonical representative of an isomorphism class. Only constructible via
/// canonicalization, so equal values are exactly isomorphic graphs.
class Graph {
  public:
    /// The empty graph (unit of the product).
    Graph() = default;

    int vertex_count() const { return n_; }
    std::uint64_t edge_mask() const { return edges_; }
    int edge_count() const;
    std::vector<Edge> edges() const;
    bool has_edge(int i, int j) const { return labeled().has_edge(i, j); }
    bool is_empty() const { return n_ == 0; }
    bool is_edgeless() const { return edges_ == 0; }
    bool is_connected() const;
    LabeledGraph labeled() const { return {n_, edges_}; }

    /// "n; u-v,u-v,..." in the canonical labeling.
    std::string str() const;
    /// Parses "n; u-v,..." and canonicalizes.
    static Graph parse(std::string_view text);

    friend auto operator<=>(const Graph&, const Graph&) = default;

  private:
    friend Graph canonical_form(const LabeledGraph& g);
    Graph(int n, std::uint64_t edges) : n_(n), edges_(edges) {}
    int n_ = 0;
    std::uint64_t edges_ = 0;
};

/// Canonical representative of a labeled graph (memoized, thread-safe).
Graph canonical_form(const LabeledGraph& g);
/// Validates the edge list and canonicalizes; throws MalformedGraph.
Graph canonicalize(int vertex_count, std::span<const Edge> edges);

/// Standard small graphs.
namespace graphs {
Graph empty();
Graph dot();
Graph edgeless(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);
/// Triangle with a pendant vertex.
Graph paw();
/// K4 minus an edge.
Graph diamond();
}  // namespace graphs

using GraphElem = LinComb<Graph>;

Graph disjoint_union(const Graph& g, const Graph& h);
GraphElem product(const GraphElem& x, const GraphElem& y);

/// G restricted to the vertex subset `subset` (bitmask), relabeled in order.
LabeledGraph induced_subgraph(const LabeledGraph& g, std::uint32_t subset);
bool is_connected(const LabeledGraph& g);
/// Vertex bitmasks of the connected components.
std::vector<std::uint32_t> component_masks(const LabeledGraph& g);
std::vector<Graph> connected_components(const Graph& g);

/// A set partition of a host graph's vertex set; each block is a bitmask.
struct ConnPartition {
    std::vector<std::uint32_t> blocks;
    friend auto operator<=>(const ConnPartition&, const ConnPartition&) = default;
};

/// All set partitions of V(g) whose blocks induce connected subgraphs.
std::vector<ConnPartition> connected_partitions(const Graph& g);
/// G/~ : blocks merged, parallel images deduplicated, loops dropped.
LabeledGraph contract_partition(const LabeledGraph& g, const ConnPartition& p);
/// G|~ : only intra-block edges kept, all vertices kept.
LabeledGraph restrict_partition(const LabeledGraph& g, const ConnPartition& p);

Tensor2<Graph> coproduct_Delta(const Graph& g);
Tensor2<Graph> coproduct_delta(const Graph& g);
Scalar counit_Delta(const GraphElem& x);
Scalar counit_delta(const GraphElem& x);

/// e must be an edge of g in its canonical labeling; throws otherwise.
Graph delete_edge(const Graph& g, const Edge& e);
Graph contract_edge(const Graph& g, const Edge& e);

/// All isomorphism classes with exactly n vertices, sorted.
std::vector<Graph> all_graphs(int n);
std::vector<Graph> all_connected_graphs(int n);

/// The graph double bialgebra as a carrier for the generic engine. Coproducts
/// are memoized; concurrent calls are synchronized.
class GraphCarrier {
  public:
    using Basis = Graph;

    Graph unit() const { return Graph{}; }
    int grade(const Graph& g) const { return g.vertex_count(); }
    GraphElem product(const Graph& a, const Graph& b) const { return GraphElem(disjoint_union(a, b)); }
    const Tensor2<Graph>& coproduct(const Graph& g) const;
    const Tensor2<Graph>& internal_coproduct(const Graph& g) const;
    Scalar counit(const Graph& g) const { return g.is_empty() ? Scalar(1) : Scalar(0); }
    Scalar internal_counit(const Graph& g) const { return g.is_edgeless() ? Scalar(1) : Scalar(0); }
    std::vector<Graph> basis(int n) const { return all_graphs(n); }
    std::string name() const { return "graph"; }
    std::string render(const Graph& g) const { return g.str(); }

  private:
    mutable std::shared_mutex mu_;
    mutable std::map<Graph, std::unique_ptr<Tensor2<Graph>>> delta_memo_;
    mutable std::map<Graph, std::unique_ptr<Tensor2<Graph>>> idelta_memo_;
};

}  // namespace dbialg

template <>
struct std::hash<dbialg::Graph> {
    std::size_t operator()(const dbialg::Graph& g) const noexcept {
        return std::hash<std::uint64_t>{}(g.edge_mask() * 0x9E3779B97F4A7C15ULL ^
                                          static_cast<std::uint64_t>(g.vertex_count()));
    }
};
