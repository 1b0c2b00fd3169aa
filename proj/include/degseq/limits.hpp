#pragma once

namespace degseq {

// Size caps for the exhaustive layers. Every exhaustive routine checks its cap
// and throws ResourceError instead of truncating.
struct OracleLimits {
    int realizations = 8;   // enumerate_realizations
    int chromatic = 16;     // exact colouring, chi-criticality, decomposition
    int h1 = 10;            // star-subdivided clique search on one graph
    int chi_layer = 7;      // sweeps/oracles that need chi(D) or h1(D)
    int omega_layer = 9;    // sweeps that only need omega(D)
    int sequences = 9;      // enumerate_graphic_sequences

    // Defaults, with DEGSEQ_ORACLE_LIMIT (if set to a positive integer)
    // replacing the realization and chi-layer caps.
    static OracleLimits from_env();
};

} // namespace degseq
