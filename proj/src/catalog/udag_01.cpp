#include "catalog.hpp"

// 5 vertices; the unfaithful pair is {1, 5} (8 extra statements).

namespace grasp::detail {

void register_udag_01(std::vector<UnitModel>& out)
{
    out.push_back(make_unit_model(
        "udag_01", 5,
        {{1, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}},
        {
            {1, 5, {2, 3}},
            {1, 2, {3, 5}},
            {1, 3, {2, 5}},
            {1, 3, {5}},
            {1, 5, {3}},
            {1, 5, {}},
            {1, 2, {5}},
            {1, 5, {2}},
        },
        5));
}

} // namespace grasp::detail
