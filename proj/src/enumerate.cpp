#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "degseq/errors.hpp"
#include "degseq/realizers.hpp"

namespace degseq {

namespace {

class RealizationWalker {
public:
    RealizationWalker(const DegreeSequence& d, const std::function<bool(const SimpleGraph&)>& visit)
        : n_(d.size()), graph_(d.size()), residual_(d.degrees()), visit_(visit) {}

    std::int64_t run() {
        walk(0);
        return visited_;
    }

private:
    // Cheap necessary conditions on the residual degrees of vertices >= from.
    // Deliberately free of the Erdos-Gallai test so the enumeration can serve
    // as an independent oracle for it.
    bool residual_feasible(Vertex from) const {
        int live = 0;
        long long total = 0;
        for (Vertex u = from; u < n_; ++u) {
            const int r = residual_[static_cast<std::size_t>(u)];
            if (r > 0) ++live;
            total += r;
        }
        if (total % 2 != 0) return false;
        for (Vertex u = from; u < n_; ++u) {
            const int r = residual_[static_cast<std::size_t>(u)];
            if (r > 0 && r > live - 1) return false;
        }
        return true;
    }

    // Returns false when the visitor asked to stop.
    bool walk(Vertex v) {
        if (v == n_) {
            ++visited_;
            return visit_(graph_);
        }
        const int need = residual_[static_cast<std::size_t>(v)];
        std::vector<Vertex> candidates;
        for (Vertex u = v + 1; u < n_; ++u)
            if (residual_[static_cast<std::size_t>(u)] > 0) candidates.push_back(u);
        if (static_cast<int>(candidates.size()) < need) return true;
        return choose(v, candidates, 0, need);
    }

    bool choose(Vertex v, const std::vector<Vertex>& candidates, std::size_t start, int need) {
        if (need == 0) {
            if (!residual_feasible(v + 1)) return true;
            const int saved = residual_[static_cast<std::size_t>(v)];
            residual_[static_cast<std::size_t>(v)] = 0;
            const bool go_on = walk(v + 1);
            residual_[static_cast<std::size_t>(v)] = saved;
            return go_on;
        }
        for (std::size_t i = start; i + static_cast<std::size_t>(need) <= candidates.size(); ++i) {
            const Vertex u = candidates[i];
            graph_.add_edge(v, u);
            --residual_[static_cast<std::size_t>(u)];
            const bool go_on = choose(v, candidates, i + 1, need - 1);
            ++residual_[static_cast<std::size_t>(u)];
            graph_.remove_edge(v, u);
            if (!go_on) return false;
        }
        return true;
    }

    int n_;
    SimpleGraph graph_;
    std::vector<int> residual_;
    const std::function<bool(const SimpleGraph&)>& visit_;
    std::int64_t visited_ = 0;
};

} // namespace

std::int64_t for_each_labeled_realization(const DegreeSequence& d,
                                         const std::function<bool(const SimpleGraph&)>& visit,
                                         const OracleLimits& limits) {
    if (d.size() > limits.realizations)
        throw ResourceError("realization enumeration limited to n <= " + std::to_string(limits.realizations) +
                            ", got n=" + std::to_string(d.size()));
    return RealizationWalker(d, visit).run();
}

std::int64_t enumerate_realizations(const DegreeSequence& d,
                                    const std::function<bool(const SimpleGraph&)>& visit,
                                    const EnumerationOptions& options) {
    if (d.size() > options.limits.realizations)
        throw ResourceError("realization enumeration limited to n <= " +
                            std::to_string(options.limits.realizations) + ", got n=" + std::to_string(d.size()));
    if (!is_graphic(d)) throw DomainError("sequence " + d.to_string() + " is not graphic");
    if (!options.up_to_isomorphism) return RealizationWalker(d, visit).run();

    std::unordered_set<std::uint64_t> seen;
    std::int64_t emitted = 0;
    bool stopped = false;
    RealizationWalker(d, [&](const SimpleGraph& g) {
        if (!seen.insert(canonical_code(g)).second) return true;
        ++emitted;
        stopped = !visit(g);
        return !stopped;
    }).run();
    return emitted;
}

std::vector<SimpleGraph> all_realizations(const DegreeSequence& d, const EnumerationOptions& options) {
    std::vector<SimpleGraph> out;
    enumerate_realizations(d, [&](const SimpleGraph& g) {
        out.push_back(g);
        return true;
    }, options);
    return out;
}

std::uint64_t canonical_code(const SimpleGraph& g) {
    const int n = g.order();
    if (n > 11) throw ResourceError("canonical_code supports n <= 11, got n=" + std::to_string(n));
    const auto rows = g.adjacency_masks();

    // Vertex signature: degree, then the sorted multiset of neighbour degrees.
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        auto& s = sig[static_cast<std::size_t>(v)];
        for (Vertex u : g.neighbors(v)) s.push_back(g.degree(u));
        std::sort(s.begin(), s.end(), std::greater<>());
        s.insert(s.begin(), g.degree(v));
    }
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex x, Vertex y) {
        return sig[static_cast<std::size_t>(x)] > sig[static_cast<std::size_t>(y)];
    });
    std::vector<std::pair<int, int>> blocks;  // [begin, end) of equal signatures
    for (int i = 0; i < n;) {
        int j = i + 1;
        while (j < n && sig[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] ==
                            sig[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])])
            ++j;
        blocks.emplace_back(i, j);
        i = j;
    }

    auto encode = [&](const std::vector<Vertex>& label) {
        std::uint64_t code = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                code <<= 1;
                if (rows[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])] >>
                        label[static_cast<std::size_t>(j)] & 1u)
                    code |= 1u;
            }
        return code;
    };

    // Odometer over the permutations of each block.
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<Vertex> label = order;
    for (auto [b, e] : blocks) std::sort(label.begin() + b, label.begin() + e);
    while (true) {
        best = std::min(best, encode(label));
        std::size_t k = 0;
        for (; k < blocks.size(); ++k) {
            auto [b, e] = blocks[k];
            if (std::next_permutation(label.begin() + b, label.begin() + e)) break;
        }
        if (k == blocks.size()) break;
    }
    return best;
}

} // namespace degseq
