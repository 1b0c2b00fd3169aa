#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "degseq/sequence.hpp"

namespace degseq {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

/// Simple undirected graph on vertices 0..n-1 (dense adjacency matrix).
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);
    SimpleGraph(int n, std::span<const Edge> edges);

    int order() const noexcept { return n_; }
    int edge_count() const noexcept { return edges_; }

    bool has_edge(Vertex u, Vertex v) const { return adj_[index(u, v)] != 0; }
    /// Throws ArgumentError on loops, out-of-range vertices or parallel edges.
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    int degree(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }
    std::vector<Vertex> neighbors(Vertex v) const;
    std::vector<Edge> edges() const;

    /// Degree at each vertex, in vertex order.
    const std::vector<int>& degree_list() const noexcept { return degree_; }
    /// Sorted degree list D(G).
    DegreeSequence degree_sequence() const { return DegreeSequence(degree_); }

    /// Adjacency row as a bitmask; requires n <= 64.
    std::uint64_t neighbor_mask(Vertex v) const;
    /// All rows as bitmasks; requires n <= 64.
    std::vector<std::uint64_t> adjacency_masks() const;

    SimpleGraph complement() const;
    /// Subgraph induced by `keep`, relabelled 0..|keep|-1 in the given order.
    SimpleGraph induced(std::span<const Vertex> keep) const;
    /// Graph with vertex v renamed to perm[v].
    SimpleGraph relabeled(std::span<const Vertex> perm) const;
    /// Vertex sets of connected components, each sorted, ordered by smallest vertex.
    std::vector<std::vector<Vertex>> components() const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    std::size_t index(Vertex u, Vertex v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }
    void check_vertex(Vertex v) const;

    int n_ = 0;
    int edges_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<int> degree_;
};

SimpleGraph complete_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph star_graph(int leaves);  // centre 0
SimpleGraph petersen_graph();

/// Disjoint union of `parts` with all edges between different parts; part i
/// occupies the consecutive label block starting at offsets[i].
struct JoinResult {
    SimpleGraph graph;
    std::vector<int> offsets;
};

JoinResult join_graphs(std::span<const SimpleGraph> parts);
SimpleGraph disjoint_union(std::span<const SimpleGraph> parts);

} // namespace degseq
