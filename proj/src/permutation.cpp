#include "grasp/permutation.hpp"

#include <numeric>
#include <string>

#include "grasp/errors.hpp"

namespace grasp {

Permutation::Permutation(std::vector<int> order)
    : order_(std::move(order))
{
    const int m = static_cast<int>(order_.size());
    if (m == 0)
        throw InvalidQuery("permutation must be nonempty");
    index_.assign(m, -1);
    for (int pos = 0; pos < m; ++pos) {
        int v = order_[pos];
        if (v < 0 || v >= m)
            throw VertexOutOfRange("permutation entry " + std::to_string(v) +
                                   " out of range for m=" + std::to_string(m));
        if (index_[v] != -1)
            throw InvalidQuery("permutation repeats vertex " + std::to_string(v));
        index_[v] = pos;
    }
}

Permutation Permutation::identity(int m)
{
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    return Permutation(std::move(order));
}

int Permutation::position_of(int v) const
{
    if (v < 0 || v >= size())
        throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range for m=" +
                               std::to_string(size()));
    return index_[v];
}

std::vector<int> Permutation::prefix_of(int v) const
{
    int pos = position_of(v);
    return std::vector<int>(order_.begin(), order_.begin() + pos);
}

} // namespace grasp
