#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "grasp/ci_statement.hpp"

namespace grasp {

using Edge = std::pair<int, int>; // j -> k
using VertexMask = boost::dynamic_bitset<>;

// Immutable directed acyclic graph over vertices 0..m-1. Construction
// validates range, self-loops and acyclicity. Edges are kept sorted
// lexicographically; parent sets are mirrored as bitsets so covered-edge
// tests are O(m/64) comparisons.
class Dag {
public:
    Dag(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return m_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int j, int k) const;

    const std::vector<int>& parents(int v) const;
    const std::vector<int>& children(int v) const;
    const VertexMask& parent_mask(int v) const;

    // An(v) / De(v) as masks, excluding v itself.
    VertexMask ancestor_mask(int v) const;
    VertexMask descendant_mask(int v) const;
    std::vector<int> non_descendants(int v) const;

    // A vertex order in which every edge points forward.
    std::vector<int> topological_order() const;

    bool operator==(const Dag& other) const = default;

private:
    void check_vertex(int v) const;

    int m_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> parents_;
    std::vector<std::vector<int>> children_;
    std::vector<VertexMask> parent_mask_;
};

// Completed partially directed graph representing a Markov equivalence
// class: compelled edges directed, reversible edges undirected.
class Cpdag {
public:
    Cpdag(int vertex_count, std::vector<Edge> directed,
          std::vector<std::pair<int, int>> undirected);

    int vertex_count() const { return m_; }
    const std::vector<Edge>& directed_edges() const { return directed_; }
    // Undirected pairs stored with first < second.
    const std::vector<std::pair<int, int>>& undirected_edges() const { return undirected_; }

    bool operator==(const Cpdag& other) const = default;

private:
    int m_ = 0;
    std::vector<Edge> directed_;
    std::vector<std::pair<int, int>> undirected_;
};

enum class EdgeTier : int {
    covered = 0,
    singular = 1,
    all = 2,
};

// Exact canonical encoding of a DAG (vertex count + sorted edge codes);
// equal DAGs have equal fingerprints and vice versa.
struct DagFingerprint {
    int m = 0;
    std::vector<std::uint32_t> codes;

    bool operator==(const DagFingerprint&) const = default;
    bool operator<(const DagFingerprint& other) const;
};

struct DagFingerprintHash {
    std::size_t operator()(const DagFingerprint& fp) const;
};

DagFingerprint fingerprint(const Dag& g);

// True iff every path between i and j is blocked by z: some non-collider on
// the path is in z, or some collider has neither itself nor a descendant in
// z. Implemented as ball-passing reachability, not path enumeration.
bool d_separated(const Dag& g, int i, int j, const std::vector<int>& z);
bool d_separated(const Dag& g, int i, int j, const VertexMask& z);

// j->k is covered when Pa(j) = Pa(k) \ {j}.
bool is_covered(const Dag& g, int j, int k);
// j->k is singular when no other unidirectional j-to-k path exists.
bool is_singular(const Dag& g, int j, int k);

std::vector<Edge> covered_edges(const Dag& g);
std::vector<Edge> singular_edges(const Dag& g);
// E^0 = covered, E^1 = singular, E^2 = all; lexicographic order.
std::vector<Edge> edges_of_tier(const Dag& g, EdgeTier t);

Cpdag to_cpdag(const Dag& g);

// Same skeleton and same v-structures.
bool markov_equivalent(const Dag& g, const Dag& h);

// Every singleton-pair d-separation statement of g, over all conditioning
// sets; exponential, guarded at m <= 12. Test and razor support only.
std::set<CiStatement> all_dsep_statements(const Dag& g);

} // namespace grasp
