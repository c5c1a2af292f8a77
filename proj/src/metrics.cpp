#include "grasp/metrics.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "grasp/errors.hpp"

namespace grasp {

namespace {

std::set<std::pair<int, int>> adjacency_pairs(const Cpdag& g)
{
    std::set<std::pair<int, int>> pairs;
    for (const auto& [j, k] : g.directed_edges())
        pairs.emplace(std::min(j, k), std::max(j, k));
    for (const auto& [j, k] : g.undirected_edges())
        pairs.emplace(j, k);
    return pairs;
}

void check_dims(const Cpdag& est, const Cpdag& truth)
{
    if (est.vertex_count() != truth.vertex_count())
        throw DimensionMismatch("estimate spans " + std::to_string(est.vertex_count()) +
                                " vertices, truth spans " + std::to_string(truth.vertex_count()));
}

ConfusionCounts confusion_of_sets(const auto& est, const auto& truth)
{
    ConfusionCounts c;
    for (const auto& e : est) {
        if (truth.count(e))
            ++c.tp;
        else
            ++c.fp;
    }
    c.fn = static_cast<long>(truth.size()) - c.tp;
    return c;
}

std::string cell(const std::optional<double>& v)
{
    if (!v)
        return "";
    std::ostringstream out;
    out.precision(6);
    out << *v;
    return out.str();
}

} // namespace

ConfusionCounts adjacency_confusion(const Cpdag& est, const Cpdag& truth)
{
    check_dims(est, truth);
    return confusion_of_sets(adjacency_pairs(est), adjacency_pairs(truth));
}

ConfusionCounts arrowhead_confusion(const Cpdag& est, const Cpdag& truth)
{
    check_dims(est, truth);
    std::set<Edge> est_dir(est.directed_edges().begin(), est.directed_edges().end());
    std::set<Edge> truth_dir(truth.directed_edges().begin(), truth.directed_edges().end());
    return confusion_of_sets(est_dir, truth_dir);
}

PrecisionRecall precision_recall(const ConfusionCounts& c)
{
    PrecisionRecall out;
    if (c.tp + c.fp > 0)
        out.precision = static_cast<double>(c.tp) / (c.tp + c.fp);
    if (c.tp + c.fn > 0)
        out.recall = static_cast<double>(c.tp) / (c.tp + c.fn);
    if (out.precision && out.recall && *out.precision + *out.recall > 0)
        out.f1 = 2 * *out.precision * *out.recall / (*out.precision + *out.recall);
    return out;
}

std::string run_csv_header()
{
    return "run_id,m,avg_degree,n,tier,seconds,adj_precision,adj_recall,"
           "arrow_precision,arrow_recall,est_edges,truth_edges";
}

std::string run_csv_row(const RunRow& r)
{
    std::ostringstream out;
    out.precision(6);
    out << r.run_id << ',' << r.m << ',' << r.avg_degree << ',' << r.n << ',' << r.tier << ','
        << r.seconds << ',' << cell(r.adjacency.precision) << ',' << cell(r.adjacency.recall)
        << ',' << cell(r.arrowhead.precision) << ',' << cell(r.arrowhead.recall) << ','
        << r.est_edges << ',' << r.truth_edges;
    return out.str();
}

} // namespace grasp
