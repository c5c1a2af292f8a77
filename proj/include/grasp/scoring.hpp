#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "grasp/induce.hpp"

namespace grasp {

// n x m sample matrix, row-major, with one name per column.
class Dataset {
public:
    Dataset(std::vector<std::string> names, std::vector<double> values, int n, int m);

    int n() const { return n_; }
    int m() const { return m_; }
    double at(int row, int col) const { return values_[static_cast<std::size_t>(row) * m_ + col]; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
    std::vector<double> values_;
    int n_ = 0;
    int m_ = 0;
};

// Sufficient statistics for the Gaussian likelihood: sample size and the
// (n-1)-normalized covariance matrix.
class CovarianceModel {
public:
    CovarianceModel(long n, Eigen::MatrixXd cov);

    long n() const { return n_; }
    int m() const { return static_cast<int>(cov_.rows()); }
    const Eigen::MatrixXd& cov() const { return cov_; }

private:
    long n_ = 0;
    Eigen::MatrixXd cov_;
};

CovarianceModel covariance(const Dataset& d);

// Local-score memo keyed by (target, parent set). Purely an accelerator:
// results are bit-identical with or without it. Not internally synchronized;
// give each worker its own instance.
class ScoreCache {
public:
    explicit ScoreCache(std::size_t capacity = 0); // 0 = unbounded

    std::optional<double> lookup(int x, const std::vector<int>& parents, int m);
    void insert(int x, const std::vector<int>& parents, int m, double score);

    std::uint64_t hits() const { return hits_; }
    std::uint64_t misses() const { return misses_; }
    std::size_t size() const { return map_.size(); }

private:
    struct Key {
        std::vector<std::uint64_t> words; // words[0] = target, rest = parent bitset
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const;
    };
    static Key make_key(int x, const std::vector<int>& parents, int m);

    std::unordered_map<Key, double, KeyHash> map_;
    std::size_t capacity_ = 0;
    std::uint64_t hits_ = 0;
    std::uint64_t misses_ = 0;
};

// -n ln(sigma2) - penalty * |parents| * ln(n), with sigma2 the OLS residual
// variance of x on parents from the covariance, floored at 1e-12. Higher is
// better.
double local_bic(const CovarianceModel& c, int x, const std::vector<int>& parents, double penalty);

// Decomposable sum of local scores over parent sets; cache optional.
double graph_bic(const CovarianceModel& c, const Dag& g, double penalty,
                 ScoreCache* cache = nullptr);

class BicEvaluator : public LocalEvaluator {
public:
    BicEvaluator(const CovarianceModel& c, double penalty, ScoreCache* cache = nullptr)
        : cov_(&c), penalty_(penalty), cache_(cache)
    {
    }
    double add_gain(int x, const std::vector<int>& current, int w) const override;
    double drop_gain(int x, const std::vector<int>& current, int w) const override;
    double score(int x, const std::vector<int>& parents) const override;
    double epsilon() const override { return 1e-10; }

private:
    const CovarianceModel* cov_;
    double penalty_;
    ScoreCache* cache_;
};

// Maps a permutation to its induced DAG and score. Oracle mode: RU induction
// and negative edge count, compared exactly. Sample mode: VP induction via
// BIC grow-shrink over each vertex's predecessors, summing the shrink
// scores; compared with a 1e-10 strictness margin. Deterministic; holds a
// per-instance boundary memo, so share one instance per worker, not across
// workers.
class Scorer {
public:
    static Scorer oracle(const IndependenceOracle& o);
    static Scorer sample(const CovarianceModel& c, double penalty, ScoreCache& cache);

    int vertex_count() const;
    std::pair<Dag, double> evaluate(const Permutation& p) const;

    bool improves(double candidate, double incumbent) const;
    bool ties(double candidate, double incumbent) const;

private:
    Scorer() = default;

    // Boundary memo: (target, predecessor set) -> (parents, local score).
    struct PrefixKey {
        std::vector<std::uint64_t> words;
        bool operator==(const PrefixKey&) const = default;
    };
    struct PrefixKeyHash {
        std::size_t operator()(const PrefixKey& k) const;
    };
    using BoundaryMemo =
        std::unordered_map<PrefixKey, std::pair<std::vector<int>, double>, PrefixKeyHash>;

    std::pair<std::vector<int>, double> target_family(int k, const std::vector<int>& prefix) const;

    const IndependenceOracle* oracle_ = nullptr;
    const CovarianceModel* cov_ = nullptr;
    ScoreCache* cache_ = nullptr;
    double penalty_ = 2.0;
    mutable BoundaryMemo memo_;
};

// (induced DAG, score) under the scorer's mode.
std::pair<Dag, double> permutation_score(const Scorer& scorer, const Permutation& p);

} // namespace grasp
