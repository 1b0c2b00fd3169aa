#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "degseq/analysis.hpp"
#include "degseq/graph.hpp"
#include "degseq/limits.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

enum class ConstructionCase { CaseOne, CaseTwo };

std::string_view to_string(ConstructionCase c);

/// Bookkeeping for the subdivided-clique construction on a sequence
/// d_1 >= ... >= d_{2m+1} with the nontrivial basic profile.
///
/// Positions are 1-based in the formulas and 0-based in the vertex labels:
/// label i-1 carries degree d_i. A = {0..m-1}, B = {m..2m}, and label m is the
/// apex v_{m+1} whose subdivided edges form the single star of the witness.
struct ConstructionPlan {
    int m = 0;
    std::int64_t alpha = 0;  // sum_{i<=m} (d_i - d_{m+1})
    std::int64_t beta = 0;   // sum_{i>=m+2} (d_{m+1} - d_i)
    int r = 0;               // (2m - d_{m+1} + alpha + beta) / 2
    std::vector<int> t;      // tree degrees t_1..t_{R+1} on labels 2m-R..2m
    ConstructionCase which = ConstructionCase::CaseOne;

    std::vector<Edge> tree_edges;     // T_1
    std::vector<Vertex> chosen;       // neighbours of v_{2m+1} picked in T_1
    std::vector<Edge> removed_edges;  // edges taken out of the two cliques (T_2 or T_4)
    std::vector<Vertex> s_order;      // CaseTwo: S in embedding order
    std::vector<Edge> low_degree_edges;  // CaseTwo: T_3

    // Cross-edge demands. CaseOne: a on A, b on B (b_1 belongs to v_{m+1}).
    // CaseTwo: a' on A, b' on B \ {v_{m+1}}.
    std::vector<int> a_targets;
    std::vector<int> b_targets;
};

/// Throws DomainError unless classify_basic_profile(d) is NontrivialBasicProfile.
ConstructionPlan plan_construction(const DegreeSequence& d);

struct WitnessedGraph {
    SimpleGraph graph;
    StarSubdivisionWitness witness;
};

struct BasicWitnessResult {
    WitnessedGraph realization;
    ConstructionPlan plan;
};

/// Realization of `d` containing a once-subdivided K_{m+1} on labels 0..m in
/// which every subdivided pair contains label m. Sub-builder failures are
/// InternalErrors carrying a dump of the plan.
BasicWitnessResult build_basic_witness(const DegreeSequence& d);

/// Join of the graphs; the witness is the union of the branch sets with all
/// cross pairs direct. Throws ArgumentError on an invalid input witness.
WitnessedGraph join_witness_realizations(std::span<const WitnessedGraph> parts);

struct PipelineResult {
    WitnessedGraph realization;  // realizes D(G')
    JoinDecomposition decomposition;
    int chi = 0;                 // chi(G)
};

/// Decompose g into a join of basic graphs, realize each factor's degree
/// sequence with a clique (trivial factors) or the subdivided-clique
/// construction (nontrivial factors), and join the results.
PipelineResult witness_pipeline(const SimpleGraph& g, const OracleLimits& limits = {});

/// Exact non-negative-denominator fraction.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational of(std::int64_t num, std::int64_t den);
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const;
    friend bool operator==(const Rational&, const Rational&) = default;
};

enum class BoundKind { Hajos, Sf, Reed, Hajos2a, Hajos2b };

std::string_view to_string(BoundKind k);

struct BoundVerdict {
    BoundKind kind = BoundKind::Sf;
    bool evaluated = false;
    bool holds = false;
    bool tight = false;
    Rational slack;  // right side minus left side of the "<=" form
};

struct BoundReport {
    std::vector<BoundVerdict> verdicts;  // one per BoundKind, in enum order

    const BoundVerdict& get(BoundKind k) const;
    bool all_hold() const;  // evaluated ones only
};

/// Evaluates
///   hajos:   chi <= h1
///   sf:      chi <= 6/5 omega + 3/5
///   reed:    chi <= 4/5 omega + 1/5 Delta + 1
///   hajos2a: omega >= 5/6 chi - 1/2
///   hajos2b: omega >= 5/4 chi - 1/4 Delta - 5/4
/// with omega = omega(D) standing for the clique number of the
/// omega-maximizing realization. Missing inputs leave a bound unevaluated.
BoundReport check_bounds(const SequenceStats& stats);

} // namespace degseq
