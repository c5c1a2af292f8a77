#include "grasp/oracle.hpp"

#include <string>
#include <utility>

#include "grasp/errors.hpp"

namespace grasp {

namespace {

std::set<CiStatement> normalize(std::vector<CiStatement> statements, int m)
{
    std::set<CiStatement> out;
    for (auto& s : statements) {
        if (s.i < 0 || s.i >= m || s.j < 0 || s.j >= m)
            throw VertexOutOfRange("CI statement endpoint out of range for m=" + std::to_string(m));
        for (int v : s.z)
            if (v < 0 || v >= m)
                throw VertexOutOfRange("CI conditioning vertex out of range for m=" +
                                       std::to_string(m));
        out.insert(std::move(s));
    }
    return out;
}

} // namespace

IndependenceOracle::IndependenceOracle(int m, std::optional<Dag> g, std::set<CiStatement> listed,
                                       bool use_dsep)
    : m_(m), dag_(std::move(g)), listed_(std::move(listed)), use_dsep_(use_dsep)
{
}

IndependenceOracle IndependenceOracle::from_dag(Dag g)
{
    int m = g.vertex_count();
    return IndependenceOracle(m, std::move(g), {}, true);
}

IndependenceOracle IndependenceOracle::augmented(Dag g, std::vector<CiStatement> extra)
{
    int m = g.vertex_count();
    return IndependenceOracle(m, std::move(g), normalize(std::move(extra), m), true);
}

IndependenceOracle IndependenceOracle::from_list(std::vector<CiStatement> statements,
                                                 int vertex_count)
{
    return IndependenceOracle(vertex_count, std::nullopt,
                              normalize(std::move(statements), vertex_count), false);
}

bool IndependenceOracle::ci(int i, int j, const std::vector<int>& z) const
{
    if (i < 0 || i >= m_ || j < 0 || j >= m_)
        throw VertexOutOfRange("query vertex out of range for m=" + std::to_string(m_));
    if (i == j)
        throw InvalidQuery("ci query requires distinct vertices");
    for (int v : z)
        if (v == i || v == j)
            throw InvalidQuery("ci conditioning set contains an endpoint");
    if (!listed_.empty() || !use_dsep_) {
        if (listed_.count(CiStatement(i, j, z)))
            return true;
    }
    return use_dsep_ && d_separated(*dag_, i, j, z);
}

} // namespace grasp
