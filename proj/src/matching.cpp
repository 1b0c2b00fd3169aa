#include <algorithm>
#include <numeric>
#include <queue>

#include "degseq/analysis.hpp"

namespace degseq {

namespace {

// Edmonds' blossom algorithm with BFS augmentation, O(n^3).
class Blossom {
public:
    explicit Blossom(const SimpleGraph& g)
        : n_(g.order()), adj_(static_cast<std::size_t>(g.order())), match_(static_cast<std::size_t>(g.order()), -1),
          parent_(static_cast<std::size_t>(g.order())), base_(static_cast<std::size_t>(g.order())),
          used_(static_cast<std::size_t>(g.order())), in_blossom_(static_cast<std::size_t>(g.order())) {
        for (Vertex v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = g.neighbors(v);
    }

    std::vector<Edge> run() {
        // Greedy start.
        for (Vertex v = 0; v < n_; ++v) {
            if (at(match_, v) != -1) continue;
            for (Vertex u : at(adj_, v)) {
                if (at(match_, u) == -1) {
                    at(match_, u) = v;
                    at(match_, v) = u;
                    break;
                }
            }
        }
        for (Vertex v = 0; v < n_; ++v) {
            if (at(match_, v) != -1) continue;
            Vertex end = find_path(v);
            while (end != -1) {  // flip the augmenting path
                const Vertex pv = at(parent_, end);
                const Vertex ppv = at(match_, pv);
                at(match_, end) = pv;
                at(match_, pv) = end;
                end = ppv;
            }
        }
        std::vector<Edge> out;
        for (Vertex v = 0; v < n_; ++v)
            if (at(match_, v) > v) out.emplace_back(v, at(match_, v));
        return out;
    }

private:
    template <class Vec>
    static typename Vec::reference at(Vec& vec, Vertex v) { return vec[static_cast<std::size_t>(v)]; }

    Vertex lca(Vertex a, Vertex b) {
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        while (true) {
            a = at(base_, a);
            at(seen, a) = 1;
            if (at(match_, a) == -1) break;
            a = at(parent_, at(match_, a));
        }
        while (true) {
            b = at(base_, b);
            if (at(seen, b)) return b;
            b = at(parent_, at(match_, b));
        }
    }

    void mark_path(Vertex v, Vertex b, Vertex child) {
        while (at(base_, v) != b) {
            at(in_blossom_, at(base_, v)) = 1;
            at(in_blossom_, at(base_, at(match_, v))) = 1;
            at(parent_, v) = child;
            child = at(match_, v);
            v = at(parent_, at(match_, v));
        }
    }

    Vertex find_path(Vertex root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        at(used_, root) = 1;
        std::queue<Vertex> q;
        q.push(root);
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (Vertex to : at(adj_, v)) {
                if (at(base_, v) == at(base_, to) || at(match_, v) == to) continue;
                if (to == root || (at(match_, to) != -1 && at(parent_, at(match_, to)) != -1)) {
                    const Vertex b = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (Vertex i = 0; i < n_; ++i) {
                        if (at(in_blossom_, at(base_, i))) {
                            at(base_, i) = b;
                            if (!at(used_, i)) {
                                at(used_, i) = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (at(parent_, to) == -1) {
                    at(parent_, to) = v;
                    if (at(match_, to) == -1) return to;
                    at(used_, at(match_, to)) = 1;
                    q.push(at(match_, to));
                }
            }
        }
        return -1;
    }

    int n_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Vertex> match_;
    std::vector<Vertex> parent_;
    std::vector<Vertex> base_;
    std::vector<char> used_;
    std::vector<char> in_blossom_;
};

} // namespace

std::vector<Edge> maximum_matching(const SimpleGraph& g) { return Blossom(g).run(); }

bool is_hypomatchable(const SimpleGraph& g) {
    const int n = g.order();
    if (n % 2 == 0) return false;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) {
        rest.clear();
        for (Vertex u = 0; u < n; ++u)
            if (u != v) rest.push_back(u);
        if (static_cast<int>(maximum_matching(g.induced(rest)).size()) * 2 != n - 1) return false;
    }
    return true;
}

} // namespace degseq
