#include "grasp/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "grasp/errors.hpp"

namespace grasp {

namespace {

constexpr double kVarianceFloor = 1e-12;

std::vector<std::uint64_t> bitset_words(const std::vector<int>& members, int m)
{
    std::vector<std::uint64_t> words((m + 63) / 64, 0);
    for (int v : members)
        words[v >> 6] |= (1ull << (v & 63));
    return words;
}

std::size_t fnv_words(const std::vector<std::uint64_t>& words)
{
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t w : words) {
        h ^= w;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

Dataset::Dataset(std::vector<std::string> names, std::vector<double> values, int n, int m)
    : names_(std::move(names)), values_(std::move(values)), n_(n), m_(m)
{
    if (n_ <= 0 || m_ <= 0)
        throw DimensionMismatch("dataset must have positive dimensions, got n=" +
                                std::to_string(n_) + " m=" + std::to_string(m_));
    if (static_cast<std::size_t>(n_) * m_ != values_.size())
        throw DimensionMismatch("dataset value count " + std::to_string(values_.size()) +
                                " does not match n*m=" + std::to_string(n_ * m_));
    if (names_.size() != static_cast<std::size_t>(m_))
        throw DimensionMismatch("dataset has " + std::to_string(names_.size()) +
                                " names for m=" + std::to_string(m_) + " columns");
}

CovarianceModel::CovarianceModel(long n, Eigen::MatrixXd cov)
    : n_(n), cov_(std::move(cov))
{
    if (cov_.rows() != cov_.cols())
        throw DimensionMismatch("covariance matrix must be square");
    if (n_ < 2)
        throw DegenerateData("covariance requires n >= 2, got n=" + std::to_string(n_));
}

CovarianceModel covariance(const Dataset& d)
{
    const int n = d.n(), m = d.m();
    if (n < 2)
        throw DegenerateData("covariance requires n >= 2, got n=" + std::to_string(n));
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(m);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < m; ++c)
            mean[c] += d.at(r, c);
    mean /= n;
    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(m, m);
    for (int r = 0; r < n; ++r)
        for (int a = 0; a < m; ++a) {
            const double da = d.at(r, a) - mean[a];
            for (int b = a; b < m; ++b)
                cov(a, b) += da * (d.at(r, b) - mean[b]);
        }
    cov /= (n - 1);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            cov(b, a) = cov(a, b);
    for (int a = 0; a < m; ++a)
        if (!(cov(a, a) > 1e-24))
            throw DegenerateData("column " + d.names()[a] + " has zero variance");
    return CovarianceModel(n, std::move(cov));
}

ScoreCache::ScoreCache(std::size_t capacity)
    : capacity_(capacity)
{
}

std::size_t ScoreCache::KeyHash::operator()(const Key& k) const
{
    return fnv_words(k.words);
}

ScoreCache::Key ScoreCache::make_key(int x, const std::vector<int>& parents, int m)
{
    Key key;
    key.words = bitset_words(parents, m);
    key.words.insert(key.words.begin(), static_cast<std::uint64_t>(x));
    return key;
}

std::optional<double> ScoreCache::lookup(int x, const std::vector<int>& parents, int m)
{
    auto it = map_.find(make_key(x, parents, m));
    if (it == map_.end()) {
        ++misses_;
        return std::nullopt;
    }
    ++hits_;
    return it->second;
}

void ScoreCache::insert(int x, const std::vector<int>& parents, int m, double score)
{
    if (capacity_ != 0 && map_.size() >= capacity_)
        return;
    map_.emplace(make_key(x, parents, m), score);
}

double local_bic(const CovarianceModel& c, int x, const std::vector<int>& parents, double penalty)
{
    const int m = c.m();
    if (x < 0 || x >= m)
        throw VertexOutOfRange("score target " + std::to_string(x) + " out of range");
    const int p = static_cast<int>(parents.size());
    double sigma2;
    if (p == 0) {
        sigma2 = c.cov()(x, x);
    } else {
        Eigen::MatrixXd a(p, p);
        Eigen::VectorXd b(p);
        for (int r = 0; r < p; ++r) {
            if (parents[r] < 0 || parents[r] >= m)
                throw VertexOutOfRange("score parent out of range");
            if (parents[r] == x)
                throw InvalidQuery("score target cannot be its own parent");
            b[r] = c.cov()(parents[r], x);
            for (int s = 0; s < p; ++s)
                a(r, s) = c.cov()(parents[r], parents[s]);
        }
        Eigen::LLT<Eigen::MatrixXd> llt(a);
        if (llt.info() != Eigen::Success)
            throw SingularParentMatrix("parent covariance submatrix is not positive definite");
        Eigen::VectorXd beta = llt.solve(b);
        sigma2 = c.cov()(x, x) - b.dot(beta);
        if (std::isnan(sigma2))
            throw SingularParentMatrix("residual variance is not finite");
    }
    sigma2 = std::max(sigma2, kVarianceFloor);
    const double n = static_cast<double>(c.n());
    return -n * std::log(sigma2) - penalty * p * std::log(n);
}

double graph_bic(const CovarianceModel& c, const Dag& g, double penalty, ScoreCache* cache)
{
    if (c.m() != g.vertex_count())
        throw DimensionMismatch("covariance spans " + std::to_string(c.m()) +
                                " variables, graph has " + std::to_string(g.vertex_count()));
    double total = 0.0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& parents = g.parents(v);
        std::vector<int> sorted(parents);
        std::sort(sorted.begin(), sorted.end());
        if (cache) {
            if (auto hit = cache->lookup(v, sorted, c.m())) {
                total += *hit;
                continue;
            }
        }
        double s = local_bic(c, v, sorted, penalty);
        if (cache)
            cache->insert(v, sorted, c.m(), s);
        total += s;
    }
    return total;
}

double BicEvaluator::score(int x, const std::vector<int>& parents) const
{
    if (cache_) {
        if (auto hit = cache_->lookup(x, parents, cov_->m()))
            return *hit;
    }
    double s = local_bic(*cov_, x, parents, penalty_);
    if (cache_)
        cache_->insert(x, parents, cov_->m(), s);
    return s;
}

double BicEvaluator::add_gain(int x, const std::vector<int>& current, int w) const
{
    std::vector<int> with(current);
    with.insert(std::upper_bound(with.begin(), with.end(), w), w);
    return score(x, with) - score(x, current);
}

double BicEvaluator::drop_gain(int x, const std::vector<int>& current, int w) const
{
    std::vector<int> without;
    without.reserve(current.size() - 1);
    for (int v : current)
        if (v != w)
            without.push_back(v);
    return score(x, without) - score(x, current);
}

std::size_t Scorer::PrefixKeyHash::operator()(const PrefixKey& k) const
{
    return fnv_words(k.words);
}

Scorer Scorer::oracle(const IndependenceOracle& o)
{
    Scorer s;
    s.oracle_ = &o;
    return s;
}

Scorer Scorer::sample(const CovarianceModel& c, double penalty, ScoreCache& cache)
{
    if (c.n() < c.m() + 2)
        throw DegenerateData("sample scoring requires n >= m + 2, got n=" +
                             std::to_string(c.n()) + " m=" + std::to_string(c.m()));
    Scorer s;
    s.cov_ = &c;
    s.penalty_ = penalty;
    s.cache_ = &cache;
    return s;
}

int Scorer::vertex_count() const
{
    return oracle_ ? oracle_->vertex_count() : cov_->m();
}

std::pair<std::vector<int>, double> Scorer::target_family(int k,
                                                          const std::vector<int>& prefix) const
{
    PrefixKey key;
    key.words = bitset_words(prefix, vertex_count());
    key.words.insert(key.words.begin(), static_cast<std::uint64_t>(k));
    auto it = memo_.find(key);
    if (it != memo_.end())
        return it->second;

    std::pair<std::vector<int>, double> family;
    if (oracle_) {
        std::vector<int> rest;
        for (int j : prefix) {
            rest.clear();
            for (int v : prefix)
                if (v != j)
                    rest.push_back(v);
            if (!oracle_->ci(j, k, rest))
                family.first.push_back(j);
        }
        family.second = -static_cast<double>(family.first.size());
    } else {
        BicEvaluator eval(*cov_, penalty_, cache_);
        family = shrink(eval, k, grow(eval, k, prefix));
    }
    std::sort(family.first.begin(), family.first.end());
    memo_.emplace(std::move(key), family);
    return family;
}

std::pair<Dag, double> Scorer::evaluate(const Permutation& p) const
{
    const int m = p.size();
    if (m != vertex_count())
        throw DimensionMismatch("permutation spans " + std::to_string(m) +
                                " vertices, scorer expects " + std::to_string(vertex_count()));
    std::vector<Edge> edges;
    double total = 0.0;
    std::vector<int> prefix;
    prefix.reserve(m);
    for (int pos = 0; pos < m; ++pos) {
        const int k = p.at(pos);
        auto [parents, s] = target_family(k, prefix);
        for (int j : parents)
            edges.emplace_back(j, k);
        total += s;
        prefix.push_back(k);
    }
    return {Dag(m, std::move(edges)), total};
}

bool Scorer::improves(double candidate, double incumbent) const
{
    if (oracle_)
        return candidate > incumbent;
    return candidate > incumbent + 1e-10;
}

bool Scorer::ties(double candidate, double incumbent) const
{
    if (oracle_)
        return candidate == incumbent;
    return std::abs(candidate - incumbent) <= 1e-10;
}

std::pair<Dag, double> permutation_score(const Scorer& scorer, const Permutation& p)
{
    return scorer.evaluate(p);
}

} // namespace grasp
