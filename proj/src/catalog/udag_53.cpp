#include "catalog.hpp"

// 5 vertices; the unfaithful pair is {1, 5} (1 extra statement).

namespace grasp::detail {

void register_udag_53(std::vector<UnitModel>& out)
{
    out.push_back(make_unit_model(
        "udag_53", 5,
        {{1, 2}, {2, 3}, {1, 4}, {3, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}},
        {
            {1, 5, {}},
        },
        8));
}

} // namespace grasp::detail
