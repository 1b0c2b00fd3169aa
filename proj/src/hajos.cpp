#include "degseq/hajos.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "degseq/errors.hpp"
#include "degseq/realizers.hpp"

namespace degseq {

std::string_view to_string(ConstructionCase c) {
    return c == ConstructionCase::CaseOne ? "CaseOne" : "CaseTwo";
}

namespace {

std::string describe(const ConstructionPlan& p) {
    std::ostringstream os;
    auto list = [&](const char* name, const auto& xs) {
        os << ' ' << name << "=(";
        for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
        os << ')';
    };
    os << "plan{m=" << p.m << " alpha=" << p.alpha << " beta=" << p.beta << " R=" << p.r
       << " case=" << to_string(p.which);
    list("t", p.t);
    list("chosen", p.chosen);
    list("a", p.a_targets);
    list("b", p.b_targets);
    os << '}';
    return os.str();
}

[[noreturn]] void internal(const ConstructionPlan& p, const std::string& what) {
    throw InternalError(what + " " + describe(p));
}

std::vector<Vertex> tree_neighbors(const std::vector<Edge>& tree, Vertex v) {
    std::vector<Vertex> out;
    for (auto [x, y] : tree) {
        if (x == v) out.push_back(y);
        if (y == v) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Edge ordered_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct CrossEdges {
    std::vector<Edge> edges;
    std::vector<Vertex> partner;  // partner[i] = matched B-label of A-label a_labels[i]
};

// Bipartite cross edges between labelled vertex sets with the requested
// demands. Zero demands on B are dropped; both sides are re-sorted with the
// original label order breaking ties.
CrossEdges bipartite_cross_edges(const std::vector<int>& a_demand, const std::vector<Vertex>& a_labels,
                                 const std::vector<int>& b_demand, const std::vector<Vertex>& b_labels) {
    auto sorted_positions = [](const std::vector<int>& demand) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < demand.size(); ++i)
            if (demand[i] > 0) idx.push_back(i);
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return demand[x] > demand[y]; });
        return idx;
    };
    const auto ai = sorted_positions(a_demand);
    const auto bi = sorted_positions(b_demand);
    if (ai.size() != a_demand.size()) throw InternalError("zero demand on the matched side");
    std::vector<int> a, b;
    for (auto i : ai) a.push_back(a_demand[i]);
    for (auto j : bi) b.push_back(b_demand[j]);

    const auto bip = realize_bipartite_with_matching(a, b);
    const int na = static_cast<int>(a.size());
    auto label_of = [&](Vertex v) {
        return v < na ? a_labels[ai[static_cast<std::size_t>(v)]] : b_labels[bi[static_cast<std::size_t>(v - na)]];
    };
    CrossEdges out;
    for (auto [u, v] : bip.graph.edges()) out.edges.emplace_back(label_of(u), label_of(v));
    out.partner.assign(a_demand.size(), -1);
    for (auto [u, v] : bip.matching) out.partner[ai[static_cast<std::size_t>(u)]] = label_of(v);
    return out;
}

} // namespace

ConstructionPlan plan_construction(const DegreeSequence& d) {
    const auto profile = classify_basic_profile(d);
    if (profile.verdict != ProfileVerdict::NontrivialBasicProfile)
        throw DomainError("sequence " + d.to_string() + " has profile " + std::string(to_string(profile.verdict)) +
                          ", expected NontrivialBasicProfile");
    const int m = *profile.m;
    auto deg = [&](int i) -> int { return d[i - 1]; };  // 1-based
    const int pivot = deg(m + 1);

    ConstructionPlan p;
    p.m = m;
    for (int i = 1; i <= m; ++i) p.alpha += deg(i) - pivot;
    for (int i = m + 2; i <= 2 * m + 1; ++i) p.beta += pivot - deg(i);
    const std::int64_t twice_r = 2 * m - pivot + p.alpha + p.beta;
    if (twice_r % 2 != 0) internal(p, "R is not an integer");
    p.r = static_cast<int>(twice_r / 2);
    const int r = p.r;
    if (!(0 <= p.beta && p.beta < r && r <= 2 * m - pivot - 1 && 2 * m - pivot - 1 <= m - 1))
        internal(p, "expected 0 <= beta < R <= 2m - d_{m+1} - 1 <= m - 1");
    if (deg(2 * m - r) != pivot) internal(p, "expected d_{2m-R} = d_{m+1}");

    for (int i = 1; i <= r; ++i) p.t.push_back(pivot - deg(2 * m - r + i) + 1);
    p.t.push_back(pivot - deg(2 * m + 1) + r - static_cast<int>(p.beta));
    if (std::accumulate(p.t.begin(), p.t.end(), 0) != 2 * r) internal(p, "tree degrees do not sum to 2R");

    // T_1 on v_{2m-R+1}..v_{2m+1}, i.e. labels 2m-R..2m.
    const Vertex first = 2 * m - r;
    for (auto [x, y] : realize_tree(std::span<const int>(p.t)).edges()) p.tree_edges.emplace_back(first + x, first + y);

    const Vertex last = 2 * m;     // v_{2m+1}
    const Vertex apex = m;         // v_{m+1}
    const int spare = r - static_cast<int>(p.beta);  // R - beta
    const auto last_nb = tree_neighbors(p.tree_edges, last);
    for (int i = 1; i <= m; ++i) p.a_targets.push_back(deg(i) - m + 1);

    std::vector<Edge> kept_tree;  // T_1 minus the edges at v_{2m+1} to the chosen neighbours
    auto drop_chosen = [&] {
        for (auto e : p.tree_edges) {
            const bool cut = (e.first == last && std::count(p.chosen.begin(), p.chosen.end(), e.second)) ||
                             (e.second == last && std::count(p.chosen.begin(), p.chosen.end(), e.first));
            if (!cut) kept_tree.push_back(e);
        }
    };

    if (pivot >= m + p.alpha) {
        p.which = ConstructionCase::CaseOne;
        if (m + spare > 2 * m - r) internal(p, "expected m + R - beta <= 2m - R");
        if (static_cast<int>(last_nb.size()) < spare - 1) internal(p, "v_{2m+1} has too few tree neighbours");
        p.chosen.assign(last_nb.begin(), last_nb.begin() + (spare - 1));
        drop_chosen();
        p.removed_edges = kept_tree;
        // Matching between the chosen neighbours and v_{m+2}..v_{m+R-beta}.
        for (int i = 0; i < spare - 1; ++i) p.removed_edges.push_back(ordered_edge(p.chosen[static_cast<std::size_t>(i)], apex + 1 + i));

        for (int i = 1; i <= m + 1; ++i) {
            const bool low = i == 1 || (spare + 1 <= i && i <= m - r);
            p.b_targets.push_back(low ? pivot - m : pivot - m + 1);
        }
        const auto sum_a = std::accumulate(p.a_targets.begin(), p.a_targets.end(), std::int64_t{0});
        const auto sum_b = std::accumulate(p.b_targets.begin(), p.b_targets.end(), std::int64_t{0});
        const std::int64_t expect = p.alpha + std::int64_t{m} * (pivot - m + 1);
        if (sum_a != expect || sum_b != expect) internal(p, "cross-edge demands do not balance");
    } else {
        p.which = ConstructionCase::CaseTwo;
        if (static_cast<int>(last_nb.size()) < spare) internal(p, "v_{2m+1} has too few tree neighbours");
        p.chosen.assign(last_nb.begin(), last_nb.begin() + spare);
        drop_chosen();
        p.s_order.push_back(last);
        p.s_order.insert(p.s_order.end(), p.chosen.begin(), p.chosen.end());
        for (Vertex v = m + 1; v <= 2 * m - r - 1; ++v) p.s_order.push_back(v);
        if (static_cast<int>(p.s_order.size()) != m - p.beta) internal(p, "expected |S| = m - beta");

        const SimpleGraph t3 = realize_low_degree(static_cast<int>(p.s_order.size()), spare);
        for (auto [x, y] : t3.edges())
            p.low_degree_edges.push_back(ordered_edge(p.s_order[static_cast<std::size_t>(x)], p.s_order[static_cast<std::size_t>(y)]));
        p.removed_edges = kept_tree;
        p.removed_edges.insert(p.removed_edges.end(), p.low_degree_edges.begin(), p.low_degree_edges.end());

        std::vector<int> t3_degree(static_cast<std::size_t>(2 * m + 1), 0);
        for (auto [x, y] : p.low_degree_edges) {
            ++t3_degree[static_cast<std::size_t>(x)];
            ++t3_degree[static_cast<std::size_t>(y)];
        }
        for (int i = 1; i <= m; ++i) {
            const bool in_s2 = t3_degree[static_cast<std::size_t>(m + i)] == 2;
            p.b_targets.push_back(in_s2 ? pivot - m + 2 : pivot - m + 1);
        }
        for (int i = 1; i <= m; ++i)
            if (i <= pivot - m) --p.a_targets[static_cast<std::size_t>(i - 1)];
    }
    return p;
}

BasicWitnessResult build_basic_witness(const DegreeSequence& d) {
    if (!is_graphic(d)) throw DomainError("sequence " + d.to_string() + " is not graphic");
    ConstructionPlan p = plan_construction(d);
    const int m = p.m;
    const int n = 2 * m + 1;
    const Vertex apex = m;
    const int pivot = d[m];

    // H_1: cliques on A and B, minus the removed edges.
    SimpleGraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if ((u < m) == (v < m)) g.add_edge(u, v);
    try {
        for (auto [x, y] : p.removed_edges) g.remove_edge(x, y);
    } catch (const ArgumentError&) {
        internal(p, "removed edge set is not simple");
    }

    std::vector<Vertex> a_labels(static_cast<std::size_t>(m));
    std::iota(a_labels.begin(), a_labels.end(), 0);
    std::vector<Vertex> b_labels;
    const Vertex b_start = p.which == ConstructionCase::CaseOne ? m : m + 1;
    for (Vertex v = b_start; v < n; ++v) b_labels.push_back(v);

    // The residual demand on B must be what the plan predicts.
    for (std::size_t j = 0; j < b_labels.size(); ++j) {
        const Vertex v = b_labels[j];
        if (d[v] - g.degree(v) != p.b_targets[j]) internal(p, "residual demand on B differs from plan");
    }
    for (Vertex u = 0; u < m; ++u) {
        const int extra = (p.which == ConstructionCase::CaseTwo && u < pivot - m) ? 1 : 0;
        if (d[u] - g.degree(u) - extra != p.a_targets[static_cast<std::size_t>(u)])
            internal(p, "residual demand on A differs from plan");
    }

    CrossEdges cross;
    try {
        cross = bipartite_cross_edges(p.a_targets, a_labels, p.b_targets, b_labels);
    } catch (const ArgumentError& e) {
        internal(p, std::string("bipartite sub-builder rejected its input: ") + e.what());
    }
    for (auto [x, y] : cross.edges) g.add_edge(x, y);
    if (p.which == ConstructionCase::CaseTwo)
        for (Vertex u = 0; u < pivot - m; ++u) g.add_edge(apex, u);

    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) != d[v]) internal(p, "constructed graph misses degree at label " + std::to_string(v));

    StarSubdivisionWitness w;
    w.order = m + 1;
    for (Vertex v = 0; v <= m; ++v) w.branch_vertices.push_back(v);
    WitnessStar star{apex, {}};
    for (Vertex u = 0; u < m; ++u) {
        for (Vertex v = u + 1; v < m; ++v) w.paths.push_back({u, v, std::nullopt});
        if (g.has_edge(u, apex)) {
            w.paths.push_back({u, apex, std::nullopt});
        } else {
            w.paths.push_back({u, apex, cross.partner[static_cast<std::size_t>(u)]});
            star.leaves.push_back(u);
        }
    }
    if (!star.leaves.empty()) w.stars.push_back(std::move(star));
    if (auto check = verify_witness(g, w); !check)
        internal(p, "witness rejected (" + std::string(to_string(check.reason)) + ": " + check.detail + ")");
    return {{std::move(g), std::move(w)}, std::move(p)};
}

WitnessedGraph join_witness_realizations(std::span<const WitnessedGraph> parts) {
    if (parts.empty()) throw ArgumentError("parts non-empty", "join of an empty list of realizations");
    std::vector<SimpleGraph> graphs;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (auto check = verify_witness(parts[i].graph, parts[i].witness); !check)
            throw ArgumentError("valid witness", "part " + std::to_string(i) + " carries an invalid witness: " +
                                                     std::string(to_string(check.reason)));
        graphs.push_back(parts[i].graph);
    }
    auto joined = join_graphs(graphs);
    WitnessedGraph out{std::move(joined.graph), {}};
    auto& w = out.witness;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const int off = joined.offsets[i];
        const auto& pw = parts[i].witness;
        // Cross pairs to every earlier part are direct join edges.
        for (Vertex v : pw.branch_vertices)
            for (Vertex u : w.branch_vertices) w.paths.push_back({u, off + v, std::nullopt});
        for (const auto& path : pw.paths) {
            std::optional<Vertex> mid;
            if (path.mid) mid = off + *path.mid;
            w.paths.push_back({off + path.u, off + path.v, mid});
        }
        for (auto s : star_structure(pw)) {
            s.center += off;
            for (auto& leaf : s.leaves) leaf += off;
            w.stars.push_back(std::move(s));
        }
        for (Vertex v : pw.branch_vertices) w.branch_vertices.push_back(off + v);
        w.order += pw.order;
    }
    return out;
}

PipelineResult witness_pipeline(const SimpleGraph& g, const OracleLimits& limits) {
    PipelineResult out;
    out.chi = chromatic_number(g, limits);
    out.decomposition = find_join_decomposition(g, limits);
    if (g.order() == 0) return out;

    std::vector<WitnessedGraph> parts;
    for (const auto& factor : out.decomposition.factors) {
        const DegreeSequence fd = factor.degree_sequence();
        const int omega = omega_of_sequence(fd);
        if (chromatic_number(factor, limits) <= omega) {
            SimpleGraph h = realize_with_clique(fd, omega, limits);
            std::vector<Vertex> clique(static_cast<std::size_t>(omega));
            std::iota(clique.begin(), clique.end(), 0);
            parts.push_back({std::move(h), clique_witness(std::move(clique))});
        } else {
            if (classify_basic_profile(fd).verdict != ProfileVerdict::NontrivialBasicProfile)
                throw InternalError("nontrivial basic factor without the nontrivial basic profile: " + fd.to_string());
            parts.push_back(build_basic_witness(fd).realization);
        }
    }
    out.realization = join_witness_realizations(parts);
    if (out.realization.graph.degree_sequence() != out.decomposition.subgraph.degree_sequence())
        throw InternalError("pipeline output does not realize D(G')");
    if (out.realization.witness.order < out.chi)
        throw InternalError("pipeline witness order " + std::to_string(out.realization.witness.order) +
                            " below chi=" + std::to_string(out.chi));
    return out;
}

} // namespace degseq
