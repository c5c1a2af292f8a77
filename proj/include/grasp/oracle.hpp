#pragma once

#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "grasp/ci_statement.hpp"
#include "grasp/dag.hpp"

namespace grasp {

// Answers singleton conditional-independence queries ci(i, j | z) from one of
// three sources:
//   dsep      - d-separation in a true DAG (faithful oracle);
//   augmented - d-separation OR membership in an extra unfaithful list;
//   explicit  - membership in a fixed list only.
// Immutable after construction; queries are symmetric in (i, j) and safe to
// issue concurrently.
class IndependenceOracle {
public:
    static IndependenceOracle from_dag(Dag g);
    static IndependenceOracle augmented(Dag g, std::vector<CiStatement> extra);
    static IndependenceOracle from_list(std::vector<CiStatement> statements, int vertex_count);

    int vertex_count() const { return m_; }
    bool ci(int i, int j, const std::vector<int>& z) const;

    // The truth DAG for dsep/augmented sources.
    const std::optional<Dag>& dag() const { return dag_; }
    const std::set<CiStatement>& listed() const { return listed_; }

private:
    IndependenceOracle(int m, std::optional<Dag> g, std::set<CiStatement> listed, bool use_dsep);

    int m_ = 0;
    std::optional<Dag> dag_;
    std::set<CiStatement> listed_;
    bool use_dsep_ = false;
};

} // namespace grasp
