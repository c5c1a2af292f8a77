#pragma once

#include <utility>
#include <vector>

#include "grasp/models.hpp"

// Registration hooks for the bundled model catalog; one source file per
// model keeps each edge and CI list next to its identifier. All data here
// is 1-based, converted once in make_unit_model.

namespace grasp::detail {

struct CiSpec {
    int i;
    int j;
    std::vector<int> z;
};

UnitModel make_unit_model(const char* name, int m, const std::vector<std::pair<int, int>>& edges,
                          const std::vector<CiSpec>& cis, int expected_sparsest_edges);

void register_udags(std::vector<UnitModel>& out);

} // namespace grasp::detail
