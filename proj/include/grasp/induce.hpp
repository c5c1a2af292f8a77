#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "grasp/dag.hpp"
#include "grasp/oracle.hpp"
#include "grasp/permutation.hpp"

namespace grasp {

// Edge j->k present iff j precedes k and j is not independent of k given the
// rest of k's predecessors.
Dag induce_ru(const IndependenceOracle& o, const Permutation& p);

// Local score contract driving the grow-shrink greedy. Gains are score
// deltas; a move is taken only when its gain strictly exceeds epsilon().
// Realizations: OracleEvaluator below (gain +-1 from a CI answer, score
// -|parents|) and the BIC evaluator in scoring.hpp.
class LocalEvaluator {
public:
    virtual ~LocalEvaluator() = default;
    // score(x | current + w) - score(x | current); w not in current.
    virtual double add_gain(int x, const std::vector<int>& current, int w) const = 0;
    // score(x | current - w) - score(x | current); w in current.
    virtual double drop_gain(int x, const std::vector<int>& current, int w) const = 0;
    virtual double score(int x, const std::vector<int>& parents) const = 0;
    virtual double epsilon() const = 0;
};

class OracleEvaluator : public LocalEvaluator {
public:
    explicit OracleEvaluator(const IndependenceOracle& o)
        : oracle_(&o)
    {
    }
    double add_gain(int x, const std::vector<int>& current, int w) const override;
    double drop_gain(int x, const std::vector<int>& current, int w) const override;
    double score(int x, const std::vector<int>& parents) const override;
    double epsilon() const override { return 0.0; }

private:
    const IndependenceOracle* oracle_;
};

// Greedy forward selection from candidates z; ties broken toward the lowest
// vertex index. Returns the selected set, sorted.
std::vector<int> grow(const LocalEvaluator& eval, int x, const std::vector<int>& z);

// Greedy backward elimination from z; returns the surviving set (sorted) and
// the local score of x given it.
std::pair<std::vector<int>, double> shrink(const LocalEvaluator& eval, int x,
                                           const std::vector<int>& z);

// Markov boundary of x relative to candidates, e.g. grow-shrink composed.
using BoundaryProvider = std::function<std::vector<int>(int x, const std::vector<int>& candidates)>;

// Pa(k) = provider(k, Pre(k)) for every vertex k.
Dag induce_vp(const BoundaryProvider& provider, const Permutation& p);

// Oracle-backed grow-shrink boundary provider; equals induce_ru's parent
// sets for compositional-graphoid oracles.
BoundaryProvider grow_shrink_provider(const IndependenceOracle& o);

// Unique minimal M subset of z with ci(x, w | M) for all w in z - M, found by
// subset enumeration (|z| <= 12). NonUniqueBoundary flags incomparable
// minimal blankets, the signature of a non-graphoid oracle.
std::vector<int> markov_boundary_bruteforce(const IndependenceOracle& o, int x,
                                            const std::vector<int>& z);

} // namespace grasp
