#include "grasp/ci_statement.hpp"

#include <algorithm>
#include <string>

#include "grasp/errors.hpp"

namespace grasp {

CiStatement::CiStatement(int a, int b, std::vector<int> cond)
    : i(std::min(a, b)), j(std::max(a, b)), z(std::move(cond))
{
    if (a == b)
        throw InvalidQuery("CI statement requires two distinct vertices, got " +
                           std::to_string(a) + " twice");
    std::sort(z.begin(), z.end());
    z.erase(std::unique(z.begin(), z.end()), z.end());
    for (int v : z)
        if (v == i || v == j)
            throw InvalidQuery("conditioning set of <" + std::to_string(i) + ", " +
                               std::to_string(j) + "> contains an endpoint");
}

} // namespace grasp
