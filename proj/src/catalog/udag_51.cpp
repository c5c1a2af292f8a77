#include "catalog.hpp"

// 5 vertices; the unfaithful pair is {1, 5} (1 extra statement).

namespace grasp::detail {

void register_udag_51(std::vector<UnitModel>& out)
{
    out.push_back(make_unit_model(
        "udag_51", 5,
        {{1, 2}, {2, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}},
        {
            {1, 5, {}},
        },
        7));
}

} // namespace grasp::detail
