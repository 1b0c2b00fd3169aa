#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degseq/graph.hpp"
#include "degseq/limits.hpp"

namespace degseq {

// ---------------------------------------------------------------- colouring

/// True iff `g` has a proper colouring with `k` colours. Requires n <= limits.chromatic.
bool is_colorable(const SimpleGraph& g, int k, const OracleLimits& limits = {});

/// Exact chromatic number by DSATUR branch and bound. Requires n <= limits.chromatic.
int chromatic_number(const SimpleGraph& g, const OracleLimits& limits = {});

/// A proper colouring with chromatic_number(g) colours, colour ids 0..chi-1.
std::vector<int> optimal_coloring(const SimpleGraph& g, const OracleLimits& limits = {});

// ------------------------------------------------------------------ cliques

/// Vertices of one maximum clique (sorted). Requires n <= 64.
std::vector<Vertex> maximum_clique(const SimpleGraph& g);
int clique_number(const SimpleGraph& g);

// ---------------------------------------------------------------- matchings

/// Maximum matching (Edmonds' blossom algorithm). Edges stored (u < v).
std::vector<Edge> maximum_matching(const SimpleGraph& g);

/// n odd and G - v has a perfect matching for every v.
bool is_hypomatchable(const SimpleGraph& g);

// ------------------------------------------------------ criticality / basic

bool is_chi_critical(const SimpleGraph& g, const OracleLimits& limits = {});

/// chi(G) <= omega(D(G)), or G is chi-critical on 2m+1 vertices with
/// chi = m+1, omega(D(G)) = m and a hypo-matchable complement.
bool is_basic(const SimpleGraph& g, const OracleLimits& limits = {});

struct JoinDecomposition {
    std::vector<Vertex> kept;                         // vertices of G' in G, sorted
    SimpleGraph subgraph;                             // G' = G[kept]
    std::vector<std::vector<Vertex>> factor_vertices; // in subgraph labels
    std::vector<SimpleGraph> factors;                 // induced on factor_vertices
};

/// Induced subgraph G' with chi(G') = chi(G) that is a join of basic graphs.
///
/// Vertices are dropped greedily (lowest label first) while chi is
/// preserved, which leaves a chi-critical graph; its join factors are the
/// components of the complement. A factor that is not basic is decomposed
/// again; a factor that cannot be reduced any further is reported as an
/// InternalError.
JoinDecomposition find_join_decomposition(const SimpleGraph& g, const OracleLimits& limits = {});

// ------------------------------------------------ star-subdivided cliques

struct WitnessPath {
    Vertex u = 0;
    Vertex v = 0;
    std::optional<Vertex> mid;  // subdivision vertex, absent for a direct edge

    friend bool operator==(const WitnessPath&, const WitnessPath&) = default;
};

struct WitnessStar {
    Vertex center = 0;
    std::vector<Vertex> leaves;

    friend bool operator==(const WitnessStar&, const WitnessStar&) = default;
};

/// An embedded K_r in which some edges are replaced by paths of length two.
/// The subdivided pairs must form vertex-disjoint stars of K_r. `stars`
/// optionally declares that star structure explicitly; when empty it is
/// derived from the subdivided pairs.
struct StarSubdivisionWitness {
    int order = 0;
    std::vector<Vertex> branch_vertices;
    std::vector<WitnessPath> paths;
    std::vector<WitnessStar> stars;

    std::vector<Vertex> subdivision_vertices() const;
    friend bool operator==(const StarSubdivisionWitness&, const StarSubdivisionWitness&) = default;
};

enum class WitnessFailure { None, Malformed, MissingEdge, OverlappingPaths, StarsNotDisjoint, DoubleSubdivision };

std::string_view to_string(WitnessFailure f);

struct WitnessCheck {
    WitnessFailure reason = WitnessFailure::None;
    std::string detail;

    bool ok() const noexcept { return reason == WitnessFailure::None; }
    explicit operator bool() const noexcept { return ok(); }
};

WitnessCheck verify_witness(const SimpleGraph& g, const StarSubdivisionWitness& w);

/// Declared stars if present, else the components of the subdivided pairs
/// (centre = the vertex of degree > 1, or the smaller label of a lone pair).
std::vector<WitnessStar> star_structure(const StarSubdivisionWitness& w);

/// Witness consisting of direct edges only; `clique` must be a clique of g.
StarSubdivisionWitness clique_witness(std::vector<Vertex> clique);

/// Lexicographically first branch set of size r admitting a witness, with
/// midpoints chosen by lowest-label augmenting paths. Requires n <= limits.h1.
std::optional<StarSubdivisionWitness> find_star_witness(const SimpleGraph& g, int r,
                                                        const OracleLimits& limits = {});

struct H1Result {
    int order = 0;
    std::optional<StarSubdivisionWitness> witness;
};

/// Largest order of a star-subdivided clique in g. Requires n <= limits.h1.
H1Result h1_of_graph(const SimpleGraph& g, const OracleLimits& limits = {});

} // namespace degseq
