#include <algorithm>
#include <numeric>
#include <string>

#include "degseq/errors.hpp"
#include "degseq/realizers.hpp"

namespace degseq {

namespace {

struct Item {
    int deg;
    int id;  // original position on its side
};

using Side = std::vector<Item>;

void sort_side(Side& s) {
    std::sort(s.begin(), s.end(), [](const Item& x, const Item& y) {
        return x.deg != y.deg ? x.deg > y.deg : x.id < y.id;
    });
}

Side positive(const Side& s) {
    Side out;
    for (const auto& it : s)
        if (it.deg > 0) out.push_back(it);
    sort_side(out);
    return out;
}

// Returns the violated condition, or an empty string.
std::string violated(const Side& a, const Side& b) {
    if (a.empty()) return "n >= 1";
    for (const auto& it : a)
        if (it.deg < 1) return "a_i >= 1";
    for (const auto& it : b)
        if (it.deg < 1) return "b_j >= 1";
    const auto n = a.size();
    const auto m = b.size();
    if (n > m) return "n <= m";
    if (static_cast<std::size_t>(a.front().deg) > m) return "a_1 <= m";
    long long sa = 0, sb = 0;
    for (const auto& it : a) sa += it.deg;
    for (const auto& it : b) sb += it.deg;
    if (sa != sb) return "sum a = sum b";
    if (b.front().deg > b.back().deg + 1) return "b_1 <= b_m + 1";
    return {};
}

class MatchingBuilder {
public:
    std::vector<std::pair<int, int>> edges;     // (a id, b id)
    std::vector<std::pair<int, int>> matching;  // (a id, b id)

    void build(const Side& a, const Side& b) {
        if (auto bad = violated(a, b); !bad.empty())
            throw InternalError("bipartite recursion reached an instance violating " + bad);
        const std::size_t n = a.size();
        const std::size_t m = b.size();

        if (n == 1) {  // K_{1,m}
            for (const auto& v : b) edges.emplace_back(a[0].id, v.id);
            matching.emplace_back(a[0].id, b[0].id);
            return;
        }
        if (b[0].deg == 1) {  // union of stars centred in A
            std::size_t next = 0;
            for (const auto& u : a) {
                matching.emplace_back(u.id, b[next].id);
                for (int i = 0; i < u.deg; ++i) edges.emplace_back(u.id, b[next++].id);
            }
            return;
        }

        const int a1 = a[0].deg;
        const int b1 = b[0].deg;
        // u_1 joined to v_1..v_{a_1}; v_1 joined to u_1..u_{b_1}.
        Side rest_a(a.begin() + 1, a.end());
        for (int i = 0; i + 1 < b1; ++i) --rest_a[static_cast<std::size_t>(i)].deg;
        Side rest_b(b.begin() + 1, b.end());
        for (int j = 0; j + 1 < a1; ++j) --rest_b[static_cast<std::size_t>(j)].deg;
        const Side a_next = positive(rest_a);
        const Side b_next = positive(rest_b);

        auto add_peeled_edges = [&] {
            for (int j = 0; j < a1; ++j) edges.emplace_back(a[0].id, b[static_cast<std::size_t>(j)].id);
            for (int i = 1; i < b1; ++i) edges.emplace_back(a[static_cast<std::size_t>(i)].id, b[0].id);
        };

        if (a_next.empty()) {
            // n = b_1 = 2, a_2 = 1: K_{1,m} with one edge subdivided.
            add_peeled_edges();
            matching.emplace_back(a[1].id, b[0].id);
            matching.emplace_back(a[0].id, b[1].id);
            return;
        }

        if (b_next.size() < m - 1) {
            // b_{a_1} = 1, so b_1 = 2.
            add_peeled_edges();
            build(a_next, b_next);
            if (a[1].deg > 1) {
                matching.emplace_back(a[0].id, b[0].id);
            } else {
                // Star at u_1 with some edges subdivided, plus a matching.
                // u_2 takes v_1; u_1 takes its lowest unsubdivided leaf.
                matching.emplace_back(a[1].id, b[0].id);
                for (int j = 1; j < a1; ++j) {
                    if (b[static_cast<std::size_t>(j)].deg == 1) {
                        matching.emplace_back(a[0].id, b[static_cast<std::size_t>(j)].id);
                        return;
                    }
                }
                throw InternalError("no unsubdivided star edge at u_1");
            }
            return;
        }

        if (a_next.size() < n - 1) {
            // a_{b_1} = 1: drop u_{b_1} and v_1, keep u_1 with degree a_1 - 1.
            Side sub_a = a_next;
            sub_a.push_back({a1 - 1, a[0].id});
            sort_side(sub_a);
            const Side sub_b(b.begin() + 1, b.end());
            const Item dropped = a[static_cast<std::size_t>(b1 - 1)];
            if (dropped.deg != 1) throw InternalError("expected a_{b_1} = 1");
            for (int i = 0; i < b1; ++i) edges.emplace_back(a[static_cast<std::size_t>(i)].id, b[0].id);
            build(sub_a, sub_b);
            matching.emplace_back(dropped.id, b[0].id);
            return;
        }

        add_peeled_edges();
        build(a_next, b_next);
        matching.emplace_back(a[0].id, b[0].id);
    }
};

} // namespace

BipartiteRealization realize_bipartite_with_matching(std::span<const int> a, std::span<const int> b) {
    if (!std::is_sorted(a.begin(), a.end(), std::greater<>()))
        throw ArgumentError("a non-increasing", "sequence a must be non-increasing");
    if (!std::is_sorted(b.begin(), b.end(), std::greater<>()))
        throw ArgumentError("b non-increasing", "sequence b must be non-increasing");
    Side sa, sb;
    for (std::size_t i = 0; i < a.size(); ++i) sa.push_back({a[i], static_cast<int>(i)});
    for (std::size_t j = 0; j < b.size(); ++j) sb.push_back({b[j], static_cast<int>(j)});
    if (auto bad = violated(sa, sb); !bad.empty())
        throw ArgumentError(bad, "bipartite realization precondition violated: " + bad);

    MatchingBuilder builder;
    builder.build(sa, sb);

    const int n = static_cast<int>(a.size());
    const int m = static_cast<int>(b.size());
    BipartiteRealization out;
    out.graph = SimpleGraph(n + m);
    for (auto [u, v] : builder.edges) out.graph.add_edge(u, n + v);
    out.part_a.resize(static_cast<std::size_t>(n));
    std::iota(out.part_a.begin(), out.part_a.end(), 0);
    out.part_b.resize(static_cast<std::size_t>(m));
    std::iota(out.part_b.begin(), out.part_b.end(), n);
    for (auto [u, v] : builder.matching) out.matching.emplace_back(u, n + v);
    std::sort(out.matching.begin(), out.matching.end());

    for (int i = 0; i < n; ++i)
        if (out.graph.degree(i) != a[static_cast<std::size_t>(i)])
            throw InternalError("bipartite realization degree mismatch on side A");
    for (int j = 0; j < m; ++j)
        if (out.graph.degree(n + j) != b[static_cast<std::size_t>(j)])
            throw InternalError("bipartite realization degree mismatch on side B");
    return out;
}

} // namespace degseq
