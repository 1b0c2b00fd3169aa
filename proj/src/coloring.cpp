#include <algorithm>
#include <bit>

#include "degseq/analysis.hpp"
#include "degseq/errors.hpp"

namespace degseq {

namespace {

using Mask = std::uint64_t;

void check_chromatic_limit(const SimpleGraph& g, const OracleLimits& limits) {
    if (g.order() > limits.chromatic || g.order() > 64)
        throw ResourceError("exact colouring limited to n <= " + std::to_string(std::min(limits.chromatic, 64)) +
                            ", got n=" + std::to_string(g.order()));
}

// DSATUR backtracking for a fixed number of colours.
class Colorer {
public:
    Colorer(const SimpleGraph& g, int k)
        : n_(g.order()), k_(k), rows_(g.adjacency_masks()), color_(static_cast<std::size_t>(g.order()), -1),
          forbidden_(static_cast<std::size_t>(g.order()), 0) {}

    bool run() { return n_ == 0 || (k_ >= 1 && place(0, 0)); }
    const std::vector<int>& colors() const { return color_; }

private:
    bool place(int colored, int used) {
        if (colored == n_) return true;
        int v = -1, best_sat = -1, best_deg = -1;
        for (int u = 0; u < n_; ++u) {
            if (color_[static_cast<std::size_t>(u)] >= 0) continue;
            const int sat = std::popcount(forbidden_[static_cast<std::size_t>(u)]);
            const int deg = std::popcount(rows_[static_cast<std::size_t>(u)]);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                v = u;
                best_sat = sat;
                best_deg = deg;
            }
        }
        if (best_sat >= k_) return false;
        // A fresh colour is interchangeable with any other fresh colour.
        const int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (forbidden_[static_cast<std::size_t>(v)] >> c & 1u) continue;
            color_[static_cast<std::size_t>(v)] = c;
            Mask nb = rows_[static_cast<std::size_t>(v)];
            std::vector<std::pair<int, Mask>> undo;
            while (nb) {
                const int u = std::countr_zero(nb);
                nb &= nb - 1;
                undo.emplace_back(u, forbidden_[static_cast<std::size_t>(u)]);
                forbidden_[static_cast<std::size_t>(u)] |= Mask{1} << c;
            }
            if (place(colored + 1, std::max(used, c + 1))) return true;
            for (auto [u, m] : undo) forbidden_[static_cast<std::size_t>(u)] = m;
            color_[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    int n_;
    int k_;
    std::vector<Mask> rows_;
    std::vector<int> color_;
    std::vector<Mask> forbidden_;
};

// Greedy DSATUR colouring; returns the number of colours used.
int greedy_colors(const SimpleGraph& g) {
    const int n = g.order();
    const auto rows = g.adjacency_masks();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<Mask> forbidden(static_cast<std::size_t>(n), 0);
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int v = -1, best_sat = -1, best_deg = -1;
        for (int u = 0; u < n; ++u) {
            if (color[static_cast<std::size_t>(u)] >= 0) continue;
            const int sat = std::popcount(forbidden[static_cast<std::size_t>(u)]);
            const int deg = std::popcount(rows[static_cast<std::size_t>(u)]);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                v = u;
                best_sat = sat;
                best_deg = deg;
            }
        }
        const int c = std::countr_one(forbidden[static_cast<std::size_t>(v)]);
        color[static_cast<std::size_t>(v)] = c;
        used = std::max(used, c + 1);
        for (Mask nb = rows[static_cast<std::size_t>(v)]; nb; nb &= nb - 1)
            forbidden[static_cast<std::size_t>(std::countr_zero(nb))] |= Mask{1} << c;
    }
    return used;
}

void expand_clique(const std::vector<Mask>& rows, Mask r, Mask p, Mask x, Mask& best) {
    if (!p && !x) {
        if (std::popcount(r) > std::popcount(best)) best = r;
        return;
    }
    if (std::popcount(r) + std::popcount(p) <= std::popcount(best)) return;
    // Pivot with the most neighbours in p.
    Mask px = p | x;
    int pivot = std::countr_zero(px);
    int most = -1;
    for (Mask it = px; it; it &= it - 1) {
        const int u = std::countr_zero(it);
        const int c = std::popcount(p & rows[static_cast<std::size_t>(u)]);
        if (c > most) {
            most = c;
            pivot = u;
        }
    }
    for (Mask it = p & ~rows[static_cast<std::size_t>(pivot)]; it; it &= it - 1) {
        const int v = std::countr_zero(it);
        const Mask bit = Mask{1} << v;
        expand_clique(rows, r | bit, p & rows[static_cast<std::size_t>(v)], x & rows[static_cast<std::size_t>(v)], best);
        p &= ~bit;
        x |= bit;
    }
}

} // namespace

bool is_colorable(const SimpleGraph& g, int k, const OracleLimits& limits) {
    check_chromatic_limit(g, limits);
    return Colorer(g, k).run();
}

std::vector<int> optimal_coloring(const SimpleGraph& g, const OracleLimits& limits) {
    check_chromatic_limit(g, limits);
    if (g.order() == 0) return {};
    const int lower = clique_number(g);
    const int upper = greedy_colors(g);
    for (int k = lower; k <= upper; ++k) {
        Colorer c(g, k);
        if (c.run()) return c.colors();
    }
    throw InternalError("greedy colouring bound not attained by exact search");
}

int chromatic_number(const SimpleGraph& g, const OracleLimits& limits) {
    const auto colors = optimal_coloring(g, limits);
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

std::vector<Vertex> maximum_clique(const SimpleGraph& g) {
    const int n = g.order();
    if (n > 64) throw ResourceError("clique search limited to n <= 64, got n=" + std::to_string(n));
    if (n == 0) return {};
    const auto rows = g.adjacency_masks();
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    Mask best = 1;  // any single vertex
    expand_clique(rows, 0, all, 0, best);
    std::vector<Vertex> out;
    for (Mask it = best; it; it &= it - 1) out.push_back(std::countr_zero(it));
    return out;
}

int clique_number(const SimpleGraph& g) { return static_cast<int>(maximum_clique(g).size()); }

} // namespace degseq
