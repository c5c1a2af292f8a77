#include "grasp/search.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "grasp/errors.hpp"

namespace grasp {

void SearchConfig::validate() const
{
    if (tier < 0 || tier > 2)
        throw InvalidQuery("tier must be 0, 1, or 2, got " + std::to_string(tier));
    if (depth < 1)
        throw InvalidQuery("depth must be positive, got " + std::to_string(depth));
    if (uncovered_depth < 0 || nonsingular_depth < 0)
        throw InvalidQuery("depth bounds must be nonnegative");
    if (uncovered_depth > depth)
        throw InvalidQuery("uncovered_depth " + std::to_string(uncovered_depth) +
                           " exceeds depth " + std::to_string(depth));
    if (nonsingular_depth > uncovered_depth)
        throw InvalidQuery("nonsingular_depth " + std::to_string(nonsingular_depth) +
                           " exceeds uncovered_depth " + std::to_string(uncovered_depth));
}

SearchConfig SearchConfig::unbounded(int tier, int m)
{
    SearchConfig cfg;
    cfg.tier = tier;
    cfg.depth = m * m;
    cfg.uncovered_depth = m * m;
    cfg.nonsingular_depth = m * m;
    return cfg;
}

Permutation tuck(const Permutation& p, int j, int k, const Dag& g)
{
    const int pj = p.position_of(j);
    const int pk = p.position_of(k);
    if (pj >= pk)
        throw OrderViolation("tuck requires " + std::to_string(j) + " to precede " +
                             std::to_string(k) + " in the permutation");
    if (!g.has_edge(j, k))
        return p;

    const auto& order = p.order();
    const VertexMask anc = g.ancestor_mask(k);
    std::vector<int> out;
    out.reserve(order.size());
    out.insert(out.end(), order.begin(), order.begin() + pj);
    for (int t = pj + 1; t < pk; ++t)
        if (anc.test(order[t]))
            out.push_back(order[t]);
    out.push_back(k);
    out.push_back(j);
    for (int t = pj + 1; t < pk; ++t)
        if (!anc.test(order[t]))
            out.push_back(order[t]);
    out.insert(out.end(), order.begin() + pk + 1, order.end());
    return Permutation(std::move(out));
}

namespace {

// covered -> depth, singular-but-uncovered -> uncovered_depth, the rest ->
// nonsingular_depth.
int class_limit(const Dag& g, int j, int k, const SearchConfig& cfg)
{
    if (is_covered(g, j, k))
        return cfg.depth;
    if (is_singular(g, j, k))
        return cfg.uncovered_depth;
    return cfg.nonsingular_depth;
}

bool in_tier(const Dag& g, int j, int k, int tier)
{
    if (tier >= 2)
        return true;
    if (tier == 1)
        return is_singular(g, j, k);
    return is_covered(g, j, k);
}

} // namespace

Permutation dfs(const Scorer& scorer, const Permutation& p, const SearchConfig& cfg,
                int current_depth, VisitedSet& visited)
{
    auto [g, score_p] = scorer.evaluate(p);
    for (const auto& [j, k] : g.edges()) {
        if (!in_tier(g, j, k, cfg.tier))
            continue;
        if (current_depth > class_limit(g, j, k, cfg))
            continue;
        Permutation tau = tuck(p, j, k, g);
        auto [g_tau, score_tau] = scorer.evaluate(tau);
        if (!visited.insert(fingerprint(g_tau)).second)
            continue;
        if (scorer.ties(score_tau, score_p) && current_depth < cfg.depth) {
            tau = dfs(scorer, tau, cfg, current_depth + 1, visited);
            score_tau = scorer.evaluate(tau).second;
        }
        if (scorer.improves(score_tau, score_p))
            return tau;
    }
    return p;
}

Permutation grasp(const Scorer& scorer, const Permutation& p, const SearchConfig& cfg)
{
    cfg.validate();
    Permutation perm = p;
    if (cfg.tier != 0) {
        SearchConfig lower = cfg;
        lower.tier = cfg.tier - 1;
        perm = grasp(scorer, perm, lower);
    }
    VisitedSet visited;
    while (true) {
        auto [g, score_perm] = scorer.evaluate(perm);
        visited.clear();
        visited.insert(fingerprint(g));
        Permutation tau = dfs(scorer, perm, cfg, 1, visited);
        if (!scorer.improves(scorer.evaluate(tau).second, score_perm))
            return tau;
        perm = tau;
    }
}

} // namespace grasp
