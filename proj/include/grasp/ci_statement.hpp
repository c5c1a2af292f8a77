#pragma once

#include <compare>
#include <vector>

namespace grasp {

// Conditional-independence statement <i, j | z>, normalized so that i < j and
// z is sorted ascending. Vertices are 0-based.
struct CiStatement {
    int i = 0;
    int j = 0;
    std::vector<int> z;

    CiStatement() = default;
    CiStatement(int a, int b, std::vector<int> cond);

    auto operator<=>(const CiStatement&) const = default;
};

} // namespace grasp
