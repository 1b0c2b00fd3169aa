#include "degseq/graph.hpp"

#include <algorithm>
#include <numeric>

#include "degseq/errors.hpp"

namespace degseq {

SimpleGraph::SimpleGraph(int n) : n_(n) {
    if (n < 0) throw ArgumentError("n >= 0", "negative vertex count");
    adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    degree_.assign(static_cast<std::size_t>(n), 0);
}

SimpleGraph::SimpleGraph(int n, std::span<const Edge> edges) : SimpleGraph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void SimpleGraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw ArgumentError("0 <= v < n", "vertex " + std::to_string(v) + " out of range for n=" +
                                              std::to_string(n_));
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ArgumentError("u != v", "self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw ArgumentError("no parallel edges",
                            "edge " + std::to_string(u) + "-" + std::to_string(v) + " already present");
    adj_[index(u, v)] = adj_[index(v, u)] = 1;
    ++degree_[static_cast<std::size_t>(u)];
    ++degree_[static_cast<std::size_t>(v)];
    ++edges_;
}

void SimpleGraph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !has_edge(u, v))
        throw ArgumentError("edge present",
                            "edge " + std::to_string(u) + "-" + std::to_string(v) + " not present");
    adj_[index(u, v)] = adj_[index(v, u)] = 0;
    --degree_[static_cast<std::size_t>(u)];
    --degree_[static_cast<std::size_t>(v)];
    --edges_;
}

std::vector<Vertex> SimpleGraph::neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(degree(v)));
    for (Vertex u = 0; u < n_; ++u)
        if (adj_[index(v, u)]) out.push_back(u);
    return out;
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (adj_[index(u, v)]) out.emplace_back(u, v);
    return out;
}

std::uint64_t SimpleGraph::neighbor_mask(Vertex v) const {
    if (n_ > 64) throw ResourceError("bitmask adjacency needs n <= 64, got n=" + std::to_string(n_));
    check_vertex(v);
    std::uint64_t mask = 0;
    for (Vertex u = 0; u < n_; ++u)
        if (adj_[index(v, u)]) mask |= std::uint64_t{1} << u;
    return mask;
}

std::vector<std::uint64_t> SimpleGraph::adjacency_masks() const {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) rows[static_cast<std::size_t>(v)] = neighbor_mask(v);
    return rows;
}

SimpleGraph SimpleGraph::complement() const {
    SimpleGraph c(n_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (!adj_[index(u, v)]) c.add_edge(u, v);
    return c;
}

SimpleGraph SimpleGraph::induced(std::span<const Vertex> keep) const {
    SimpleGraph h(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        check_vertex(keep[i]);
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (has_edge(keep[i], keep[j])) h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
    return h;
}

SimpleGraph SimpleGraph::relabeled(std::span<const Vertex> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw ArgumentError("|perm| = n", "permutation size mismatch");
    SimpleGraph h(n_);
    for (auto [u, v] : edges()) h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return h;
}

std::vector<std::vector<Vertex>> SimpleGraph::components() const {
    std::vector<int> comp(static_cast<std::size_t>(n_), -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n_; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<Vertex> stack{s};
        comp[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (Vertex u = 0; u < n_; ++u) {
                if (adj_[index(v, u)] && comp[static_cast<std::size_t>(u)] < 0) {
                    comp[static_cast<std::size_t>(u)] = id;
                    stack.push_back(u);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph cycle_graph(int n) {
    if (n < 3) throw ArgumentError("n >= 3", "a cycle needs at least 3 vertices");
    SimpleGraph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

SimpleGraph path_graph(int n) {
    SimpleGraph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

SimpleGraph star_graph(int leaves) {
    SimpleGraph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

SimpleGraph petersen_graph() {
    SimpleGraph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(i, i + 5);                // spokes
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return g;
}

JoinResult join_graphs(std::span<const SimpleGraph> parts) {
    if (parts.empty()) throw ArgumentError("parts non-empty", "join of an empty list of graphs");
    JoinResult r;
    int total = 0;
    for (const auto& p : parts) {
        r.offsets.push_back(total);
        total += p.order();
    }
    r.graph = SimpleGraph(total);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const int off = r.offsets[i];
        for (auto [u, v] : parts[i].edges()) r.graph.add_edge(off + u, off + v);
        const int end = off + parts[i].order();
        for (Vertex u = off; u < end; ++u)
            for (Vertex v = end; v < total; ++v) r.graph.add_edge(u, v);
    }
    return r;
}

SimpleGraph disjoint_union(std::span<const SimpleGraph> parts) {
    int total = 0;
    for (const auto& p : parts) total += p.order();
    SimpleGraph g(total);
    int off = 0;
    for (const auto& p : parts) {
        for (auto [u, v] : p.edges()) g.add_edge(off + u, off + v);
        off += p.order();
    }
    return g;
}

} // namespace degseq
