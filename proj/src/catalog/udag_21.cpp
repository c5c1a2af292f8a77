#include "catalog.hpp"

// 5 vertices; the unfaithful pair is {1, 5} (3 extra statements).

namespace grasp::detail {

void register_udag_21(std::vector<UnitModel>& out)
{
    out.push_back(make_unit_model(
        "udag_21", 5,
        {{1, 3}, {1, 4}, {2, 4}, {3, 4}, {3, 5}, {4, 5}},
        {
            {1, 5, {}},
            {1, 2, {5}},
            {1, 5, {2}},
        },
        6));
}

} // namespace grasp::detail
