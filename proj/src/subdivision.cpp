#include <algorithm>
#include <map>
#include <set>

#include "degseq/analysis.hpp"
#include "degseq/errors.hpp"

namespace degseq {

std::vector<Vertex> StarSubdivisionWitness::subdivision_vertices() const {
    std::vector<Vertex> out;
    for (const auto& p : paths)
        if (p.mid) out.push_back(*p.mid);
    std::sort(out.begin(), out.end());
    return out;
}

std::string_view to_string(WitnessFailure f) {
    switch (f) {
    case WitnessFailure::None: return "ok";
    case WitnessFailure::Malformed: return "malformed";
    case WitnessFailure::MissingEdge: return "missing edge";
    case WitnessFailure::OverlappingPaths: return "overlapping paths";
    case WitnessFailure::StarsNotDisjoint: return "stars not disjoint";
    case WitnessFailure::DoubleSubdivision: return "double subdivision";
    }
    return "?";
}

namespace {

using Pair = std::pair<Vertex, Vertex>;

Pair ordered(Vertex a, Vertex b) { return a < b ? Pair{a, b} : Pair{b, a}; }

std::string pair_str(Pair p) { return std::to_string(p.first) + "-" + std::to_string(p.second); }

WitnessCheck fail(WitnessFailure r, std::string detail) { return {r, std::move(detail)}; }

// Edge set of vertex-disjoint stars iff every edge has an endpoint of degree one.
bool is_star_forest(const std::set<Pair>& edges) {
    std::map<Vertex, int> deg;
    for (auto [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    for (auto [a, b] : edges)
        if (deg[a] > 1 && deg[b] > 1) return false;
    return true;
}

} // namespace

WitnessCheck verify_witness(const SimpleGraph& g, const StarSubdivisionWitness& w) {
    const int n = g.order();
    auto in_range = [&](Vertex v) { return v >= 0 && v < n; };

    if (w.order != static_cast<int>(w.branch_vertices.size()))
        return fail(WitnessFailure::Malformed, "order does not match the number of branch vertices");
    std::set<Vertex> branch;
    for (Vertex v : w.branch_vertices) {
        if (!in_range(v)) return fail(WitnessFailure::Malformed, "branch vertex " + std::to_string(v) + " out of range");
        if (!branch.insert(v).second)
            return fail(WitnessFailure::Malformed, "branch vertex " + std::to_string(v) + " repeated");
    }

    std::map<Pair, const WitnessPath*> by_pair;
    for (const auto& p : w.paths) {
        if (p.u == p.v || !branch.count(p.u) || !branch.count(p.v))
            return fail(WitnessFailure::Malformed,
                        "path " + pair_str(ordered(p.u, p.v)) + " does not join two branch vertices");
        if (p.mid && !in_range(*p.mid))
            return fail(WitnessFailure::Malformed, "midpoint " + std::to_string(*p.mid) + " out of range");
        if (!by_pair.emplace(ordered(p.u, p.v), &p).second)
            return fail(WitnessFailure::DoubleSubdivision,
                        "branch pair " + pair_str(ordered(p.u, p.v)) + " has more than one path");
    }
    const std::size_t pairs = branch.size() * (branch.size() - (branch.empty() ? 0 : 1)) / 2;
    if (by_pair.size() != pairs)
        return fail(WitnessFailure::Malformed, "not every branch pair has a path");

    std::set<Vertex> mids;
    std::set<Pair> subdivided;
    for (const auto& [pr, p] : by_pair) {
        if (!p->mid) continue;
        if (branch.count(*p->mid))
            return fail(WitnessFailure::OverlappingPaths,
                        "midpoint " + std::to_string(*p->mid) + " of " + pair_str(pr) + " is a branch vertex");
        if (!mids.insert(*p->mid).second)
            return fail(WitnessFailure::OverlappingPaths,
                        "midpoint " + std::to_string(*p->mid) + " shared by several paths");
        subdivided.insert(pr);
    }

    if (!is_star_forest(subdivided))
        return fail(WitnessFailure::StarsNotDisjoint, "subdivided pairs do not form vertex-disjoint stars");
    if (!w.stars.empty()) {
        std::set<Vertex> touched;
        std::set<Pair> declared;
        for (const auto& s : w.stars) {
            if (s.leaves.empty() || !touched.insert(s.center).second)
                return fail(WitnessFailure::StarsNotDisjoint,
                            "declared star at " + std::to_string(s.center) + " overlaps another star");
            for (Vertex leaf : s.leaves) {
                if (!touched.insert(leaf).second)
                    return fail(WitnessFailure::StarsNotDisjoint,
                                "declared stars share vertex " + std::to_string(leaf));
                declared.insert(ordered(s.center, leaf));
            }
        }
        if (declared != subdivided)
            return fail(WitnessFailure::StarsNotDisjoint, "declared stars differ from the subdivided pairs");
    }

    for (const auto& [pr, p] : by_pair) {
        if (!p->mid) {
            if (!g.has_edge(pr.first, pr.second))
                return fail(WitnessFailure::MissingEdge, "edge " + pair_str(pr) + " absent from host graph");
        } else if (!g.has_edge(pr.first, *p->mid) || !g.has_edge(*p->mid, pr.second)) {
            return fail(WitnessFailure::MissingEdge,
                        "path " + pair_str(pr) + " via " + std::to_string(*p->mid) + " uses a non-edge");
        }
    }
    return {};
}

std::vector<WitnessStar> star_structure(const StarSubdivisionWitness& w) {
    if (!w.stars.empty()) return w.stars;
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const auto& p : w.paths) {
        if (!p.mid) continue;
        adj[p.u].push_back(p.v);
        adj[p.v].push_back(p.u);
    }
    std::vector<WitnessStar> out;
    std::set<Vertex> done;
    for (const auto& [v, nb] : adj) {
        if (done.count(v)) continue;
        const bool lone_pair = nb.size() == 1 && adj[nb.front()].size() == 1;
        if (nb.size() < 2 && !lone_pair) continue;  // a leaf; its centre comes up separately
        WitnessStar s{v, nb};
        std::sort(s.leaves.begin(), s.leaves.end());
        done.insert(v);
        done.insert(nb.begin(), nb.end());
        out.push_back(std::move(s));
    }
    return out;
}

StarSubdivisionWitness clique_witness(std::vector<Vertex> clique) {
    std::sort(clique.begin(), clique.end());
    StarSubdivisionWitness w;
    w.order = static_cast<int>(clique.size());
    w.branch_vertices = clique;
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j) w.paths.push_back({clique[i], clique[j], std::nullopt});
    return w;
}

namespace {

class WitnessSearch {
public:
    WitnessSearch(const SimpleGraph& g, int r) : g_(g), n_(g.order()), r_(r) {
        for (Vertex v = 0; v < n_; ++v)
            if (g.degree(v) >= r - 1) eligible_.push_back(v);
    }

    std::optional<StarSubdivisionWitness> run() {
        if (r_ <= 0) return StarSubdivisionWitness{};
        if (static_cast<int>(eligible_.size()) < r_) return std::nullopt;
        chosen_.clear();
        if (pick(0)) return result_;
        return std::nullopt;
    }

private:
    bool pick(std::size_t start) {
        if (static_cast<int>(chosen_.size()) == r_) return try_branch_set();
        for (std::size_t i = start; i < eligible_.size(); ++i) {
            if (static_cast<int>(eligible_.size() - i) < r_ - static_cast<int>(chosen_.size())) break;
            const Vertex v = eligible_[i];
            // Missing pairs so far must stay a star forest and fit the spare vertices.
            chosen_.push_back(v);
            if (partial_ok() && pick(i + 1)) return true;
            chosen_.pop_back();
        }
        return false;
    }

    bool partial_ok() const {
        std::set<Pair> missing;
        for (std::size_t i = 0; i < chosen_.size(); ++i)
            for (std::size_t j = i + 1; j < chosen_.size(); ++j)
                if (!g_.has_edge(chosen_[i], chosen_[j])) missing.insert(ordered(chosen_[i], chosen_[j]));
        return static_cast<int>(missing.size()) <= n_ - r_ && is_star_forest(missing);
    }

    bool try_branch_set() {
        std::vector<Pair> missing;
        for (std::size_t i = 0; i < chosen_.size(); ++i)
            for (std::size_t j = i + 1; j < chosen_.size(); ++j)
                if (!g_.has_edge(chosen_[i], chosen_[j])) missing.emplace_back(chosen_[i], chosen_[j]);

        std::vector<char> is_branch(static_cast<std::size_t>(n_), 0);
        for (Vertex v : chosen_) is_branch[static_cast<std::size_t>(v)] = 1;
        std::vector<std::vector<Vertex>> options(missing.size());
        for (std::size_t k = 0; k < missing.size(); ++k)
            for (Vertex x = 0; x < n_; ++x)
                if (!is_branch[static_cast<std::size_t>(x)] && g_.has_edge(x, missing[k].first) &&
                    g_.has_edge(x, missing[k].second))
                    options[k].push_back(x);

        // Kuhn's augmenting paths: missing pair -> distinct midpoint.
        std::vector<int> owner(static_cast<std::size_t>(n_), -1);
        std::vector<Vertex> assigned(missing.size(), -1);
        for (std::size_t k = 0; k < missing.size(); ++k) {
            std::vector<char> seen(static_cast<std::size_t>(n_), 0);
            if (!augment(static_cast<int>(k), options, owner, assigned, seen)) return false;
        }

        StarSubdivisionWitness w;
        w.order = r_;
        w.branch_vertices = chosen_;
        std::size_t k = 0;
        for (std::size_t i = 0; i < chosen_.size(); ++i)
            for (std::size_t j = i + 1; j < chosen_.size(); ++j) {
                if (g_.has_edge(chosen_[i], chosen_[j])) {
                    w.paths.push_back({chosen_[i], chosen_[j], std::nullopt});
                } else {
                    w.paths.push_back({chosen_[i], chosen_[j], assigned[k++]});
                }
            }
        result_ = std::move(w);
        return true;
    }

    static bool augment(int k, const std::vector<std::vector<Vertex>>& options, std::vector<int>& owner,
                        std::vector<Vertex>& assigned, std::vector<char>& seen) {
        for (Vertex x : options[static_cast<std::size_t>(k)]) {
            if (seen[static_cast<std::size_t>(x)]) continue;
            seen[static_cast<std::size_t>(x)] = 1;
            const int prev = owner[static_cast<std::size_t>(x)];
            if (prev < 0 || augment(prev, options, owner, assigned, seen)) {
                owner[static_cast<std::size_t>(x)] = k;
                assigned[static_cast<std::size_t>(k)] = x;
                return true;
            }
        }
        return false;
    }

    const SimpleGraph& g_;
    int n_;
    int r_;
    std::vector<Vertex> eligible_;
    std::vector<Vertex> chosen_;
    StarSubdivisionWitness result_;
};

void check_h1_limit(const SimpleGraph& g, const OracleLimits& limits) {
    if (g.order() > limits.h1)
        throw ResourceError("star-subdivided clique search limited to n <= " + std::to_string(limits.h1) +
                            ", got n=" + std::to_string(g.order()));
}

} // namespace

std::optional<StarSubdivisionWitness> find_star_witness(const SimpleGraph& g, int r, const OracleLimits& limits) {
    check_h1_limit(g, limits);
    if (r > g.order()) return std::nullopt;
    return WitnessSearch(g, r).run();
}

H1Result h1_of_graph(const SimpleGraph& g, const OracleLimits& limits) {
    check_h1_limit(g, limits);
    if (g.order() == 0) return {0, StarSubdivisionWitness{}};
    // Witness existence is monotone in r (drop a branch vertex), so climb from
    // the clique number until the search fails.
    H1Result best{clique_number(g), clique_witness(maximum_clique(g))};
    for (int r = best.order + 1; r <= g.order(); ++r) {
        auto w = WitnessSearch(g, r).run();
        if (!w) break;
        best = {r, std::move(w)};
    }
    if (auto w = WitnessSearch(g, best.order).run()) best.witness = std::move(w);
    return best;
}

} // namespace degseq
