#include <algorithm>
#include <numeric>

#include "degseq/analysis.hpp"
#include "degseq/errors.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

namespace {

std::vector<Vertex> without(int n, Vertex skip) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (v != skip) out.push_back(v);
    return out;
}

struct Decomposed {
    std::vector<Vertex> kept;                  // in the labels of the decomposed graph
    std::vector<std::vector<Vertex>> factors;  // same labels
};

Decomposed decompose(const SimpleGraph& g, const OracleLimits& limits) {
    const int chi = chromatic_number(g, limits);

    // Greedy vertex deletion; the survivors induce a chi-critical graph.
    std::vector<Vertex> kept(static_cast<std::size_t>(g.order()));
    std::iota(kept.begin(), kept.end(), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<Vertex> trial;
        for (Vertex u : kept)
            if (u != v) trial.push_back(u);
        if (chromatic_number(g.induced(trial), limits) == chi) kept = std::move(trial);
    }
    const SimpleGraph critical = g.induced(kept);

    Decomposed out{kept, {}};
    for (const auto& comp : critical.complement().components()) {
        std::vector<Vertex> in_g;
        for (Vertex v : comp) in_g.push_back(kept[static_cast<std::size_t>(v)]);
        const SimpleGraph factor = g.induced(in_g);
        if (is_basic(factor, limits)) {
            out.factors.push_back(std::move(in_g));
            continue;
        }
        if (comp.size() == kept.size())
            throw InternalError("chi-critical graph with connected complement is not basic; "
                                "join decomposition cannot proceed (n=" + std::to_string(factor.order()) + ")");
        const Decomposed inner = decompose(factor, limits);
        std::vector<Vertex> dropped;
        for (std::size_t i = 0; i < in_g.size(); ++i)
            if (!std::binary_search(inner.kept.begin(), inner.kept.end(), static_cast<Vertex>(i)))
                dropped.push_back(in_g[i]);
        for (Vertex v : dropped) out.kept.erase(std::find(out.kept.begin(), out.kept.end(), v));
        for (const auto& f : inner.factors) {
            std::vector<Vertex> mapped;
            for (Vertex v : f) mapped.push_back(in_g[static_cast<std::size_t>(v)]);
            out.factors.push_back(std::move(mapped));
        }
    }
    return out;
}

} // namespace

bool is_chi_critical(const SimpleGraph& g, const OracleLimits& limits) {
    const int chi = chromatic_number(g, limits);
    for (Vertex v = 0; v < g.order(); ++v)
        if (chromatic_number(g.induced(without(g.order(), v)), limits) >= chi) return false;
    return true;
}

bool is_basic(const SimpleGraph& g, const OracleLimits& limits) {
    const int chi = chromatic_number(g, limits);
    const int omega_d = omega_of_sequence(g.degree_sequence());
    if (chi <= omega_d) return true;
    const int n = g.order();
    if (n % 2 == 0) return false;
    const int m = (n - 1) / 2;
    return chi == m + 1 && omega_d == m && is_chi_critical(g, limits) && is_hypomatchable(g.complement());
}

JoinDecomposition find_join_decomposition(const SimpleGraph& g, const OracleLimits& limits) {
    Decomposed d = decompose(g, limits);
    std::sort(d.kept.begin(), d.kept.end());
    JoinDecomposition out;
    out.kept = d.kept;
    out.subgraph = g.induced(d.kept);
    for (auto& f : d.factors) {
        std::sort(f.begin(), f.end());
        std::vector<Vertex> local;
        for (Vertex v : f)
            local.push_back(static_cast<Vertex>(std::lower_bound(d.kept.begin(), d.kept.end(), v) - d.kept.begin()));
        out.factors.push_back(out.subgraph.induced(local));
        out.factor_vertices.push_back(std::move(local));
    }
    std::vector<std::size_t> idx(out.factors.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return out.factor_vertices[a].front() < out.factor_vertices[b].front();
    });
    JoinDecomposition sorted{out.kept, out.subgraph, {}, {}};
    for (auto i : idx) {
        sorted.factor_vertices.push_back(std::move(out.factor_vertices[i]));
        sorted.factors.push_back(std::move(out.factors[i]));
    }
    return sorted;
}

} // namespace degseq
