#pragma once
// Deliberately naive reference implementations. Nothing here shares code with
// the library beyond SimpleGraph itself.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "degseq/graph.hpp"

namespace brute {

using degseq::SimpleGraph;
using degseq::Vertex;

inline std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) p.emplace_back(i, j);
    return p;
}

inline SimpleGraph from_mask(int n, std::uint64_t mask) {
    SimpleGraph g(n);
    const auto pairs = all_pairs(n);
    for (std::size_t e = 0; e < pairs.size(); ++e)
        if (mask >> e & 1u) g.add_edge(pairs[e].first, pairs[e].second);
    return g;
}

// Every labeled graph on n vertices (n <= 7).
inline void for_each_graph(int n, const std::function<void(const SimpleGraph&)>& visit) {
    const auto m = all_pairs(n).size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) visit(from_mask(n, mask));
}

// Degree lists (positional) of every labeled graph on n vertices, as masks.
inline std::vector<std::vector<int>> all_degree_lists(int n) {
    std::vector<std::vector<int>> out;
    const auto pairs = all_pairs(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (mask >> e & 1u) {
                ++deg[static_cast<std::size_t>(pairs[e].first)];
                ++deg[static_cast<std::size_t>(pairs[e].second)];
            }
        out.push_back(std::move(deg));
    }
    return out;
}

// Labeled graphs with deg(i) = degrees[i], counted by edge-subset filtering.
inline std::int64_t count_labeled(const std::vector<int>& degrees) {
    const int n = static_cast<int>(degrees.size());
    const auto pairs = all_pairs(n);
    std::int64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (mask >> e & 1u) {
                ++deg[static_cast<std::size_t>(pairs[e].first)];
                ++deg[static_cast<std::size_t>(pairs[e].second)];
            }
        if (deg == degrees) ++count;
    }
    return count;
}

inline bool is_clique(const SimpleGraph& g, const std::vector<Vertex>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j])) return false;
    return true;
}

inline int clique_number(const SimpleGraph& g) {
    const int n = g.order();
    int best = 0;
    for (std::uint32_t sub = 0; sub < (1u << n); ++sub) {
        std::vector<Vertex> s;
        for (int v = 0; v < n; ++v)
            if (sub >> v & 1u) s.push_back(v);
        if (static_cast<int>(s.size()) > best && is_clique(g, s)) best = static_cast<int>(s.size());
    }
    return best;
}

inline bool colorable(const SimpleGraph& g, int k) {
    const int n = g.order();
    if (n == 0) return true;
    if (k <= 0) return false;
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    while (true) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)]) {
                ok = false;
                break;
            }
        if (ok) return true;
        int i = 0;
        while (i < n && ++c[static_cast<std::size_t>(i)] == k) c[static_cast<std::size_t>(i++)] = 0;
        if (i == n) return false;
    }
}

inline int chromatic_number(const SimpleGraph& g) {
    int k = 0;
    while (!colorable(g, k)) ++k;
    return k;
}

inline int matching_number(const SimpleGraph& g) {
    const auto edges = g.edges();
    int best = 0;
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int size) {
        best = std::max(best, size);
        if (i == edges.size()) return;
        auto [u, v] = edges[i];
        if (!used[static_cast<std::size_t>(u)] && !used[static_cast<std::size_t>(v)]) {
            used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
            rec(i + 1, size + 1);
            used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 0;
        }
        rec(i + 1, size);
    };
    rec(0, 0);
    return best;
}

inline bool hypomatchable(const SimpleGraph& g) {
    const int n = g.order();
    if (n % 2 == 0) return false;
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> keep;
        for (Vertex u = 0; u < n; ++u)
            if (u != v) keep.push_back(u);
        if (matching_number(g.induced(keep)) * 2 != n - 1) return false;
    }
    return true;
}

// A set of pairs forms vertex-disjoint stars iff it has no triangle and no
// path with three edges.
inline bool star_forest(const std::vector<std::pair<int, int>>& pairs) {
    auto touches = [](std::pair<int, int> a, int v) { return a.first == v || a.second == v; };
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = 0; j < pairs.size(); ++j)
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                if (i == j || j == k || i == k) continue;
                // e_j shares one end with e_i and the other end with e_k
                const auto [a, b] = pairs[j];
                const bool ia = touches(pairs[i], a), ib = touches(pairs[i], b);
                const bool ka = touches(pairs[k], a), kb = touches(pairs[k], b);
                if ((ia && kb) || (ib && ka)) return false;
            }
    return true;
}

// Largest r with a branch set of size r whose non-adjacent pairs form a star
// forest and can each be routed through a private common neighbour outside
// the branch set. Plain backtracking over midpoints.
inline int h1(const SimpleGraph& g) {
    const int n = g.order();
    int best = n == 0 ? 0 : 1;
    for (std::uint32_t sub = 1; sub < (1u << n); ++sub) {
        std::vector<Vertex> branch;
        for (int v = 0; v < n; ++v)
            if (sub >> v & 1u) branch.push_back(v);
        const int r = static_cast<int>(branch.size());
        if (r <= best) continue;
        std::vector<std::pair<int, int>> missing;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (!g.has_edge(branch[static_cast<std::size_t>(i)], branch[static_cast<std::size_t>(j)]))
                    missing.emplace_back(branch[static_cast<std::size_t>(i)], branch[static_cast<std::size_t>(j)]);
        if (static_cast<int>(missing.size()) > n - r || !star_forest(missing)) continue;
        std::vector<char> taken(static_cast<std::size_t>(n), 0);
        for (Vertex b : branch) taken[static_cast<std::size_t>(b)] = 1;
        std::function<bool(std::size_t)> place = [&](std::size_t i) {
            if (i == missing.size()) return true;
            auto [a, b] = missing[i];
            for (Vertex w = 0; w < n; ++w) {
                if (taken[static_cast<std::size_t>(w)] || !g.has_edge(a, w) || !g.has_edge(b, w)) continue;
                taken[static_cast<std::size_t>(w)] = 1;
                if (place(i + 1)) return true;
                taken[static_cast<std::size_t>(w)] = 0;
            }
            return false;
        };
        if (place(0)) best = r;
    }
    return best;
}

// Random (a, b) pair satisfying every precondition of the bipartite builder.
inline std::pair<std::vector<int>, std::vector<int>> random_bipartite_instance(std::mt19937& rng, int max_sum) {
    while (true) {
        std::uniform_int_distribution<int> sizes(1, 8);
        const int n = sizes(rng);
        const int m = std::uniform_int_distribution<int>(n, 10)(rng);
        std::vector<int> a(static_cast<std::size_t>(n));
        for (auto& x : a) x = std::uniform_int_distribution<int>(1, m)(rng);
        std::sort(a.rbegin(), a.rend());
        int total = 0;
        for (int x : a) total += x;
        if (total > max_sum || total < m) continue;
        // b: as even as possible, so b_1 <= b_m + 1 holds.
        std::vector<int> b(static_cast<std::size_t>(m), total / m);
        for (int i = 0; i < total % m; ++i) ++b[static_cast<std::size_t>(i)];
        return {a, b};
    }
}

} // namespace brute
