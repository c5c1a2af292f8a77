#pragma once

#include <string>
#include <vector>

#include "grasp/oracle.hpp"
#include "grasp/search.hpp"

namespace grasp {

// A bundled test model: a true DAG plus the extra independencies that hold
// beyond the DAG's own, together with the sparsest edge count attainable
// over all permutations under the resulting oracle.
struct UnitModel {
    std::string name;
    Dag truth;
    std::vector<CiStatement> extra_ci;
    int expected_sparsest_edges = 0;

    IndependenceOracle oracle() const;
};

// All bundled models: the udag_01..udag_61 path-cancellation family, then
// faithful_collider, cancel_square4, and cancel_dense5.
const std::vector<UnitModel>& udag_catalog();

// Outcome of the all-permutations experiment: recovered means every start
// ended Markov-equivalent to the truth; failures lists the starts that did
// not, in lexicographic order.
struct RecoveryResult {
    bool recovered = true;
    std::vector<Permutation> failures;
};

// Runs grasp at the given tier from every one of the m! permutations using
// cfg's depth bounds. Guarded at m <= 7. jobs > 1 splits the starts across
// threads; results are identical to the serial run.
RecoveryResult recovery_test(const UnitModel& model, int tier, const SearchConfig& cfg,
                             int jobs = 1);

// Every DAG class is a sorted fingerprint set over the full enumeration of
// labeled DAGs: Markovian DAGs (cmc), those with no Markovian proper
// edge-subgraph (sgs), the sparsest Markovian DAGs (frugal), Markovian DAGs
// whose statement set no other Markovian DAG strictly extends (p_minimal),
// the exact-statement-match DAGs (faithful), and the u_ variants, which
// equal their base class when it is a single Markov equivalence class and
// are empty otherwise.
struct RazorSets {
    std::vector<DagFingerprint> cmc;
    std::vector<DagFingerprint> sgs;
    std::vector<DagFingerprint> frugal;
    std::vector<DagFingerprint> u_frugal;
    std::vector<DagFingerprint> p_minimal;
    std::vector<DagFingerprint> u_p_minimal;
    std::vector<DagFingerprint> faithful;
};

// Classifies every labeled DAG on m vertices against the oracle's singleton
// statement set. Guarded at m <= 5. jobs > 1 splits the enumeration across
// threads; results are identical to the serial run.
RazorSets razor_sets(const IndependenceOracle& o, int m, int jobs = 1);

// Induces the DAG of every one of the m! permutations and returns the
// distinct minimum-edge-count results, sorted by fingerprint. Guarded at
// m <= 7.
std::vector<Dag> sp_exhaustive(const IndependenceOracle& o, int m);

} // namespace grasp
