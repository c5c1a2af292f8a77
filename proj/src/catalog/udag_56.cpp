#include "catalog.hpp"

// 5 vertices; the unfaithful pair is {1, 4} (1 extra statement).

namespace grasp::detail {

void register_udag_56(std::vector<UnitModel>& out)
{
    out.push_back(make_unit_model(
        "udag_56", 5,
        {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}},
        {
            {1, 4, {}},
        },
        6));
}

} // namespace grasp::detail
