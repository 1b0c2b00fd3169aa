#include "degseq/realizers.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "degseq/errors.hpp"

namespace degseq {

namespace {

// Highest residual first, lowest index on ties.
std::vector<Vertex> by_residual(const std::vector<int>& residual, std::span<const Vertex> candidates) {
    std::vector<Vertex> order(candidates.begin(), candidates.end());
    std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) {
        return residual[static_cast<std::size_t>(x)] > residual[static_cast<std::size_t>(y)];
    });
    return order;
}

bool multiset_graphic(std::vector<int> values) {
    values.erase(std::remove(values.begin(), values.end(), 0), values.end());
    return is_graphic(DegreeSequence(std::move(values)));
}

} // namespace

SimpleGraph realize_any(const DegreeSequence& d) {
    if (!is_graphic(d)) throw DomainError("sequence " + d.to_string() + " is not graphic");
    const int n = d.size();
    SimpleGraph g(n);
    std::vector<int> residual(d.degrees());
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    while (true) {
        auto order = by_residual(residual, all);
        if (order.empty() || residual[static_cast<std::size_t>(order.front())] == 0) break;
        const Vertex v = order.front();
        const int need = residual[static_cast<std::size_t>(v)];
        residual[static_cast<std::size_t>(v)] = 0;
        for (int i = 1; i <= need; ++i) {
            if (i >= static_cast<int>(order.size()) || residual[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] == 0)
                throw InternalError("Havel-Hakimi reduction stuck on graphic sequence " + d.to_string());
            const Vertex u = order[static_cast<std::size_t>(i)];
            g.add_edge(v, u);
            --residual[static_cast<std::size_t>(u)];
        }
    }
    return g;
}

SimpleGraph realize_tree(std::span<const int> degrees) {
    const int n = static_cast<int>(degrees.size());
    for (int x : degrees) {
        if (x < 1) throw DomainError("tree realization requires d_n >= 1 (found degree " + std::to_string(x) + ")");
    }
    const long long total = std::accumulate(degrees.begin(), degrees.end(), 0LL);
    if (n == 0 || total != 2LL * n - 2)
        throw DomainError("tree realization requires sum = 2n-2 (sum=" + std::to_string(total) +
                          ", n=" + std::to_string(n) + ")");

    SimpleGraph g(n);
    std::vector<Vertex> internal;
    std::vector<Vertex> leaves;
    for (Vertex v = 0; v < n; ++v) (degrees[static_cast<std::size_t>(v)] >= 2 ? internal : leaves).push_back(v);
    if (internal.empty()) {  // n == 2
        g.add_edge(0, 1);
        return g;
    }
    // Caterpillar: spine through the internal vertices in index order, then
    // each leaf hangs off the lowest-index vertex with unmet degree.
    for (std::size_t i = 0; i + 1 < internal.size(); ++i) g.add_edge(internal[i], internal[i + 1]);
    std::size_t next = 0;
    for (Vertex leaf : leaves) {
        while (next < internal.size() &&
               g.degree(internal[next]) == degrees[static_cast<std::size_t>(internal[next])])
            ++next;
        if (next == internal.size()) throw InternalError("tree construction ran out of attachment points");
        g.add_edge(internal[next], leaf);
    }
    return g;
}

SimpleGraph realize_tree(const DegreeSequence& d) { return realize_tree(std::span<const int>(d.degrees())); }

SimpleGraph realize_low_degree(int n, int e) {
    if (n < 1) throw ArgumentError("n >= 1", "vertex count must be at least 1");
    if (e < 0) throw ArgumentError("e >= 0", "edge count must be non-negative");
    if (e == n && n >= 3) return cycle_graph(n);
    if (e + 1 <= n && n <= 2 * e && n >= 2) {
        SimpleGraph g(n);
        const int path_edges = 2 * e - n + 1;
        for (Vertex v = 0; v < path_edges; ++v) g.add_edge(v, v + 1);
        for (Vertex v = path_edges + 1; v + 1 < n; v += 2) g.add_edge(v, v + 1);
        return g;
    }
    throw InfeasibleError("no graph with n=" + std::to_string(n) + ", e=" + std::to_string(e) +
                          " and all degrees in {1,2}: need e = n >= 3 or e+1 <= n <= 2e");
}

namespace {

class CliqueCompletion {
public:
    CliqueCompletion(const DegreeSequence& d, int k, std::int64_t budget)
        : n_(d.size()), k_(k), budget_(budget), graph_(d.size()), residual_(d.degrees()) {
        for (Vertex u = 0; u < k; ++u) {
            residual_[static_cast<std::size_t>(u)] -= k - 1;
            for (Vertex v = u + 1; v < k; ++v) graph_.add_edge(u, v);
        }
    }

    // nullopt: budget exhausted; false: proven impossible.
    std::optional<bool> run() {
        for (int r : residual_)
            if (r < 0) return false;
        if (!feasible()) return false;
        return search();
    }

    const SimpleGraph& graph() const { return graph_; }

private:
    bool allowed(Vertex u, Vertex v) const { return u != v && !(u < k_ && v < k_) && !graph_.has_edge(u, v); }

    bool feasible() const {
        std::vector<int> live;
        for (Vertex v = 0; v < n_; ++v) {
            const int r = residual_[static_cast<std::size_t>(v)];
            if (r == 0) continue;
            int partners = 0;
            for (Vertex u = 0; u < n_; ++u)
                if (residual_[static_cast<std::size_t>(u)] > 0 && allowed(v, u)) ++partners;
            if (partners < r) return false;
            live.push_back(r);
        }
        return multiset_graphic(std::move(live));
    }

    std::optional<bool> search() {
        if (--budget_ < 0) return std::nullopt;
        Vertex v = -1;
        for (Vertex u = 0; u < n_; ++u)
            if (residual_[static_cast<std::size_t>(u)] > 0 &&
                (v < 0 || residual_[static_cast<std::size_t>(u)] > residual_[static_cast<std::size_t>(v)]))
                v = u;
        if (v < 0) return true;

        std::vector<Vertex> candidates;
        for (Vertex u = 0; u < n_; ++u)
            if (residual_[static_cast<std::size_t>(u)] > 0 && allowed(v, u)) candidates.push_back(u);
        candidates = by_residual(residual_, candidates);
        const int need = residual_[static_cast<std::size_t>(v)];
        if (static_cast<int>(candidates.size()) < need) return false;

        // Combinations of `need` candidates in lexicographic order.
        std::vector<int> pick(static_cast<std::size_t>(need));
        std::iota(pick.begin(), pick.end(), 0);
        const int c = static_cast<int>(candidates.size());
        while (true) {
            for (int i : pick) {
                const Vertex u = candidates[static_cast<std::size_t>(i)];
                graph_.add_edge(v, u);
                --residual_[static_cast<std::size_t>(u)];
            }
            residual_[static_cast<std::size_t>(v)] = 0;
            if (feasible()) {
                auto r = search();
                if (!r || *r) return r;
            }
            residual_[static_cast<std::size_t>(v)] = need;
            for (int i : pick) {
                const Vertex u = candidates[static_cast<std::size_t>(i)];
                graph_.remove_edge(v, u);
                ++residual_[static_cast<std::size_t>(u)];
            }
            int i = need - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == c - need + i) --i;
            if (i < 0) return false;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < need; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }

    int n_;
    int k_;
    std::int64_t budget_;
    SimpleGraph graph_;
    std::vector<int> residual_;
};

} // namespace

SimpleGraph realize_with_clique(const DegreeSequence& d, int k, const OracleLimits& limits) {
    if (!is_graphic(d)) throw DomainError("sequence " + d.to_string() + " is not graphic");
    if (!rao_omega_at_least(d, k))
        throw InfeasibleError("no realization of " + d.to_string() + " contains a clique of order " +
                              std::to_string(k));
    CliqueCompletion search(d, k, 2'000'000);
    if (auto found = search.run()) {
        if (*found) return search.graph();
        throw InternalError("clique completion refuted an instance accepted by the clique criterion: " +
                            d.to_string() + ", k=" + std::to_string(k));
    }
    if (d.size() > limits.realizations)
        throw ResourceError("clique completion search budget exhausted for " + d.to_string());
    std::optional<SimpleGraph> hit;
    enumerate_realizations(
        d,
        [&](const SimpleGraph& g) {
            for (Vertex u = 0; u < k; ++u)
                for (Vertex v = u + 1; v < k; ++v)
                    if (!g.has_edge(u, v)) return true;
            hit = g;
            return false;
        },
        {false, limits});
    if (!hit) throw InternalError("no clique realization found by enumeration for " + d.to_string());
    return *hit;
}

} // namespace degseq
