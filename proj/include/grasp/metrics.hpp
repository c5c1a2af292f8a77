#pragma once

#include <optional>
#include <string>

#include "grasp/dag.hpp"

namespace grasp {

// True/false positive and false negative counts; true negatives are implicit.
struct ConfusionCounts {
    long tp = 0;
    long fp = 0;
    long fn = 0;

    bool operator==(const ConfusionCounts&) const = default;
};

// Unordered vertex pairs adjacent in each pattern, direction ignored.
ConfusionCounts adjacency_confusion(const Cpdag& est, const Cpdag& truth);

// Ordered pairs over directed edges only. A directed estimate matching a
// same-direction directed truth edge is a tp; a directed estimate with no
// such counterpart is a fp; an unmatched directed truth edge is a fn, so an
// undirected estimate against a directed truth edge costs a fn but no fp.
ConfusionCounts arrowhead_confusion(const Cpdag& est, const Cpdag& truth);

// tp/(tp+fp), tp/(tp+fn), and their harmonic mean. A 0/0 quotient is
// reported as absent rather than coerced to 0 or 1, and f1 is absent
// whenever either input quotient is.
struct PrecisionRecall {
    std::optional<double> precision;
    std::optional<double> recall;
    std::optional<double> f1;
};

PrecisionRecall precision_recall(const ConfusionCounts& c);

// Mean that skips absent values and remembers how many were present.
class MeanAccumulator {
public:
    void add(const std::optional<double>& v)
    {
        if (v) {
            sum_ += *v;
            ++count_;
        }
    }
    int count() const { return count_; }
    std::optional<double> mean() const
    {
        if (count_ == 0)
            return std::nullopt;
        return sum_ / count_;
    }

private:
    double sum_ = 0.0;
    int count_ = 0;
};

// One evaluation row: identity, problem size, timing, adjacency and
// arrowhead quality, and edge counts.
struct RunRow {
    std::string run_id;
    int m = 0;
    double avg_degree = 0.0;
    long n = 0;
    int tier = 0;
    double seconds = 0.0;
    PrecisionRecall adjacency;
    PrecisionRecall arrowhead;
    long est_edges = 0;
    long truth_edges = 0;
};

// Header and row for the evaluation CSV; absent quotients print as empty
// cells.
std::string run_csv_header();
std::string run_csv_row(const RunRow& r);

} // namespace grasp
