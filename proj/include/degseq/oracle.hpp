#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "degseq/graph.hpp"
#include "degseq/hajos.hpp"
#include "degseq/limits.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

/// Every non-increasing graphic sequence of length n with all entries >= min_degree,
/// in lexicographically increasing order. No size cap.
void for_each_graphic_sequence(int n, int min_degree, const std::function<void(const DegreeSequence&)>& visit);

/// Every graphic sequence of length exactly n (zeros allowed).
/// Requires 1 <= n <= limits.sequences.
std::vector<DegreeSequence> enumerate_graphic_sequences(int n, const OracleLimits& limits = {});

/// One graph per isomorphism class on n vertices (n <= 8), grown by vertex
/// augmentation with canonical-code deduplication.
std::vector<SimpleGraph> enumerate_graphs(int n);

/// Largest clique number over all realizations (brute force).
int omega_by_enumeration(const DegreeSequence& d, const OracleLimits& limits = {});

/// chi(D): maximum chromatic number over realizations. Requires n <= limits.chi_layer.
int chi_of_sequence(const DegreeSequence& d, const OracleLimits& limits = {});

/// h1(D): maximum h1 over realizations. Requires n <= limits.chi_layer.
int h1_of_sequence(const DegreeSequence& d, const OracleLimits& limits = {});

/// chi and omega over all realizations of (n-3)^n. Every such realization is
/// the complement of a 2-regular graph, so the classes are indexed by the
/// partitions of n into cycle lengths >= 3.
struct CocycleOracle {
    int chi = 0;
    int omega = 0;
    int classes = 0;
};
CocycleOracle cocycle_sequence_oracle(int n, const OracleLimits& limits = {});

/// Stats with omega from the clique criterion and, when `with_oracle`, chi and
/// h1 from enumeration.
SequenceStats compute_stats(const DegreeSequence& d, bool with_oracle, const OracleLimits& limits = {});

enum class SweepCheck { Hajos, Sf, Reed, Hajos2, RaoVsOracle, EgVsOracle, LargeclVsRao };

std::string_view to_string(SweepCheck c);
SweepCheck parse_sweep_check(std::string_view name);  // ParseError on unknown names
const std::vector<SweepCheck>& all_sweep_checks();
bool needs_chi_layer(SweepCheck c);

struct CheckOutcome {
    SweepCheck check = SweepCheck::Sf;
    std::int64_t evaluated = 0;
    std::vector<std::string> violations;        // expected empty
    std::vector<DegreeSequence> tight_cases;   // equality cases of the bound
};

struct SweepReport {
    int n_max = 0;
    std::int64_t sequences_checked = 0;
    std::vector<CheckOutcome> checks;
    double seconds = 0.0;
    int workers = 1;

    bool clean() const;
    const CheckOutcome& outcome(SweepCheck c) const;
};

struct SweepOptions {
    OracleLimits limits{};
    bool force = false;  // acknowledge n_max beyond the configured caps
    int workers = 0;     // 0: hardware concurrency
};

/// Runs the selected checks over every graphic sequence with 1 <= n <= n_max.
/// Throws ResourceError when n_max exceeds limits.chi_layer (for checks that
/// need chi(D)) or limits.omega_layer, unless options.force is set.
SweepReport sweep(int n_max, const std::set<SweepCheck>& checks, const SweepOptions& options = {});

} // namespace degseq
