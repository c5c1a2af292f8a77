#include "grasp/induce.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "grasp/errors.hpp"

namespace grasp {

Dag induce_ru(const IndependenceOracle& o, const Permutation& p)
{
    const int m = p.size();
    if (m != o.vertex_count())
        throw DimensionMismatch("permutation spans " + std::to_string(m) +
                                " vertices, oracle expects " + std::to_string(o.vertex_count()));
    std::vector<Edge> edges;
    std::vector<int> rest;
    for (int pos = 0; pos < m; ++pos) {
        const int k = p.at(pos);
        for (int t = 0; t < pos; ++t) {
            const int j = p.at(t);
            rest.clear();
            for (int s = 0; s < pos; ++s)
                if (s != t)
                    rest.push_back(p.at(s));
            if (!o.ci(j, k, rest))
                edges.emplace_back(j, k);
        }
    }
    return Dag(m, std::move(edges));
}

double OracleEvaluator::add_gain(int x, const std::vector<int>& current, int w) const
{
    return oracle_->ci(x, w, current) ? -1.0 : 1.0;
}

double OracleEvaluator::drop_gain(int x, const std::vector<int>& current, int w) const
{
    std::vector<int> without;
    without.reserve(current.size() - 1);
    for (int v : current)
        if (v != w)
            without.push_back(v);
    return oracle_->ci(x, w, without) ? 1.0 : -1.0;
}

double OracleEvaluator::score(int x, const std::vector<int>& parents) const
{
    (void)x;
    return -static_cast<double>(parents.size());
}

std::vector<int> grow(const LocalEvaluator& eval, int x, const std::vector<int>& z)
{
    std::vector<int> candidates(z);
    std::sort(candidates.begin(), candidates.end());
    std::vector<int> selected;
    std::vector<char> taken(candidates.size(), 0);
    while (true) {
        int best = -1;
        double best_gain = -std::numeric_limits<double>::infinity();
        for (std::size_t t = 0; t < candidates.size(); ++t) {
            if (taken[t])
                continue;
            double gain = eval.add_gain(x, selected, candidates[t]);
            if (gain > best_gain) {
                best_gain = gain;
                best = static_cast<int>(t);
            }
        }
        if (best < 0 || !(best_gain > eval.epsilon()))
            break;
        taken[best] = 1;
        selected.insert(std::upper_bound(selected.begin(), selected.end(), candidates[best]),
                        candidates[best]);
    }
    return selected;
}

std::pair<std::vector<int>, double> shrink(const LocalEvaluator& eval, int x,
                                           const std::vector<int>& z)
{
    std::vector<int> kept(z);
    std::sort(kept.begin(), kept.end());
    while (true) {
        int best = -1;
        double best_gain = -std::numeric_limits<double>::infinity();
        for (std::size_t t = 0; t < kept.size(); ++t) {
            double gain = eval.drop_gain(x, kept, kept[t]);
            if (gain > best_gain) {
                best_gain = gain;
                best = static_cast<int>(t);
            }
        }
        if (best < 0 || !(best_gain > eval.epsilon()))
            break;
        kept.erase(kept.begin() + best);
    }
    return {kept, eval.score(x, kept)};
}

Dag induce_vp(const BoundaryProvider& provider, const Permutation& p)
{
    const int m = p.size();
    std::vector<Edge> edges;
    for (int pos = 0; pos < m; ++pos) {
        const int k = p.at(pos);
        std::vector<int> prefix(p.order().begin(), p.order().begin() + pos);
        for (int j : provider(k, prefix))
            edges.emplace_back(j, k);
    }
    return Dag(m, std::move(edges));
}

BoundaryProvider grow_shrink_provider(const IndependenceOracle& o)
{
    return [&o](int x, const std::vector<int>& candidates) {
        OracleEvaluator eval(o);
        return shrink(eval, x, grow(eval, x, candidates)).first;
    };
}

std::vector<int> markov_boundary_bruteforce(const IndependenceOracle& o, int x,
                                            const std::vector<int>& z)
{
    if (z.size() > 12)
        throw TooLarge("boundary enumeration guarded at |z| <= 12, got " +
                       std::to_string(z.size()));
    std::vector<int> pool(z);
    std::sort(pool.begin(), pool.end());
    const int subsets = 1 << pool.size();

    auto is_blanket = [&](unsigned mask) {
        std::vector<int> inside;
        for (std::size_t t = 0; t < pool.size(); ++t)
            if (mask & (1u << t))
                inside.push_back(pool[t]);
        for (std::size_t t = 0; t < pool.size(); ++t)
            if (!(mask & (1u << t)) && !o.ci(x, pool[t], inside))
                return false;
        return true;
    };

    std::vector<unsigned> blankets;
    for (unsigned mask = 0; mask < static_cast<unsigned>(subsets); ++mask)
        if (is_blanket(mask))
            blankets.push_back(mask);

    std::vector<unsigned> minimal;
    for (unsigned a : blankets) {
        bool has_proper_subset = false;
        for (unsigned b : blankets)
            if (b != a && (b & ~a) == 0) {
                has_proper_subset = true;
                break;
            }
        if (!has_proper_subset)
            minimal.push_back(a);
    }
    if (minimal.size() != 1)
        throw NonUniqueBoundary("found " + std::to_string(minimal.size()) +
                                " incomparable minimal blankets for vertex " + std::to_string(x));
    std::vector<int> out;
    for (std::size_t t = 0; t < pool.size(); ++t)
        if (minimal[0] & (1u << t))
            out.push_back(pool[t]);
    return out;
}

} // namespace grasp
