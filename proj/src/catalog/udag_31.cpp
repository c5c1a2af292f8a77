#include "catalog.hpp"

// 5 vertices; the unfaithful pair is {1, 5} (1 extra statement).

namespace grasp::detail {

void register_udag_31(std::vector<UnitModel>& out)
{
    out.push_back(make_unit_model(
        "udag_31", 5,
        {{1, 2}, {2, 3}, {3, 4}, {1, 5}, {4, 5}},
        {
            {1, 5, {}},
        },
        5));
}

} // namespace grasp::detail
