#include "catalog.hpp"

// 5 vertices; the unfaithful pair is {1, 4} (1 extra statement).

namespace grasp::detail {

void register_udag_58(std::vector<UnitModel>& out)
{
    out.push_back(make_unit_model(
        "udag_58", 5,
        {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {1, 5}, {3, 5}},
        {
            {1, 4, {}},
        },
        6));
}

} // namespace grasp::detail
