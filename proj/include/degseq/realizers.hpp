#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "degseq/graph.hpp"
#include "degseq/limits.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

// All builders bind positions to labels: in the output, vertex i has the
// degree requested at position i.

/// Havel–Hakimi realization. Throws DomainError if `d` is not graphic.
SimpleGraph realize_any(const DegreeSequence& d);

/// Tree with deg(i) = degrees[i]; the list need not be sorted.
/// Requires every entry >= 1 and sum = 2n - 2, else DomainError naming the
/// failed condition.
SimpleGraph realize_tree(std::span<const int> degrees);
SimpleGraph realize_tree(const DegreeSequence& d);

/// Graph with n vertices, e edges and all degrees in {1, 2}: a single cycle
/// when e = n >= 3, otherwise a path on vertices 0..2e-n+1 followed by a
/// matching on the remaining vertices. Throws InfeasibleError otherwise.
SimpleGraph realize_low_degree(int n, int e);

/// Bipartite graph with side A = {0..|a|-1} and side B = {|a|..|a|+|b|-1}.
struct BipartiteRealization {
    SimpleGraph graph;
    std::vector<Vertex> part_a;
    std::vector<Vertex> part_b;
    std::vector<Edge> matching;  // covers part_a, stored (a-vertex, b-vertex)
};

/// Bipartite realization of (a, b) that has a matching covering A.
///
/// Preconditions (each reported as ArgumentError with the named condition):
/// both lists non-increasing ("a non-increasing", "b non-increasing"), all
/// entries positive ("a_i >= 1", "b_j >= 1"), "n <= m", "a_1 <= m",
/// "sum a = sum b" and "b_1 <= b_m + 1".
///
/// The construction is the inductive one: peel off u_1 (joined to
/// v_1..v_{a_1}) and v_1 (joined to u_1..u_{b_1}), recurse on what remains,
/// and put u_1v_1 or a substitute edge into the matching. Ties are broken
/// toward lower original indices so the output is deterministic.
BipartiteRealization realize_bipartite_with_matching(std::span<const int> a, std::span<const int> b);

/// Realization of `d` whose vertices 0..k-1 (the k largest degrees) form a
/// clique. Throws InfeasibleError when no such realization exists, and
/// ResourceError if the bounded search gives up on an instance beyond the
/// enumeration cap.
SimpleGraph realize_with_clique(const DegreeSequence& d, int k, const OracleLimits& limits = {});

struct EnumerationOptions {
    bool up_to_isomorphism = false;
    OracleLimits limits{};
};

/// Calls `visit` for every labelled graph with deg(i) = d[i], each once.
/// Returning false from `visit` stops the enumeration. Returns the number of
/// graphs visited. Throws ResourceError if n exceeds limits.realizations and
/// DomainError if `d` is not graphic.
std::int64_t enumerate_realizations(const DegreeSequence& d,
                                    const std::function<bool(const SimpleGraph&)>& visit,
                                    const EnumerationOptions& options = {});

/// Same walk without the graphicality precondition or isomorphism filter;
/// visits nothing when `d` has no realization. Requires n <= limits.realizations.
std::int64_t for_each_labeled_realization(const DegreeSequence& d,
                                         const std::function<bool(const SimpleGraph&)>& visit,
                                         const OracleLimits& limits = {});

std::vector<SimpleGraph> all_realizations(const DegreeSequence& d, const EnumerationOptions& options = {});

/// Isomorphism-invariant code of a graph with at most 11 vertices: the
/// minimum upper-triangle adjacency word over all labellings that order the
/// vertices by (degree, sorted neighbour degrees).
std::uint64_t canonical_code(const SimpleGraph& g);

} // namespace degseq
