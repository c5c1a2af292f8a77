#pragma once

#include <vector>

namespace grasp {

// Vertex ordering pi_1..pi_m with its inverse index. order() holds the
// vertex at each position; position_of(v) is that vertex's position.
class Permutation {
public:
    explicit Permutation(std::vector<int> order);
    static Permutation identity(int m);

    int size() const { return static_cast<int>(order_.size()); }
    int at(int position) const { return order_[position]; }
    int position_of(int v) const;
    const std::vector<int>& order() const { return order_; }

    // Pre(v): the vertices strictly before v, in order.
    std::vector<int> prefix_of(int v) const;

    bool operator==(const Permutation& other) const { return order_ == other.order_; }

private:
    std::vector<int> order_;
    std::vector<int> index_;
};

} // namespace grasp
