#pragma once

#include <cstdint>
#include <unordered_set>

#include "grasp/scoring.hpp"

namespace grasp {

// Knobs for the tuck search. `depth` bounds covered-edge tucks,
// `uncovered_depth` bounds singular-but-uncovered tucks, and
// `nonsingular_depth` bounds all remaining tucks, so with the defaults the
// search explores covered tucks three levels deep but tries the riskier
// classes only at the top level.
struct SearchConfig {
    int tier = 2;
    int depth = 3;
    int uncovered_depth = 1;
    int nonsingular_depth = 1;
    std::uint64_t seed = 0;

    void validate() const;

    // Depth bounds large enough (m^2) that only the visited set and score
    // monotonicity terminate the search.
    static SearchConfig unbounded(int tier, int m);
};

using VisitedSet = std::unordered_set<DagFingerprint, DagFingerprintHash>;

// Rearranges p so k precedes j. With delta2 the segment strictly between j
// and k, the k-ancestors within delta2 keep their relative order and move
// ahead of k; everything else in delta2 lands after j. Returns p unchanged
// when j->k is not an edge of g. g must be the DAG induced by p.
Permutation tuck(const Permutation& p, int j, int k, const Dag& g);

// One depth-first pass over tuck neighbors of p, in lexicographic edge
// order. Strict improvement returns immediately; an equal-score neighbor is
// explored recursively while the class-specific depth allows; DAGs already
// fingerprinted in visited are skipped. Returns p when nothing improves.
Permutation dfs(const Scorer& scorer, const Permutation& p, const SearchConfig& cfg,
                int current_depth, VisitedSet& visited);

// Tiered driver: runs the lower tiers first, then repeats dfs at cfg.tier
// until the score stops improving. Output score is never worse than the
// input's, and never worse than the lower tier's result from the same start.
Permutation grasp(const Scorer& scorer, const Permutation& p, const SearchConfig& cfg);

} // namespace grasp
