#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <Eigen/Dense>

#include "grasp/errors.hpp"
#include "grasp/scoring.hpp"
#include "grasp/simulate.hpp"

using namespace grasp;

namespace {

Dataset tiny_dataset()
{
    // Columns a, b with hand-computable moments.
    return Dataset({"a", "b"}, {1.0, 2.0, 2.0, 4.0, 3.0, 6.0, 4.0, 9.0}, 4, 2);
}

Dataset simulated(int m, double degree, long n, std::uint64_t seed)
{
    SimConfig cfg{m, degree, n, -1.0, 1.0, 1.0, seed};
    return sample_sem(random_dag(cfg), cfg);
}

// OLS residual variance computed directly from raw data, bypassing the
// covariance pathway entirely.
double residual_variance(const Dataset& d, int x, const std::vector<int>& parents)
{
    const int n = d.n();
    const int p = static_cast<int>(parents.size());
    Eigen::MatrixXd X(n, p + 1);
    Eigen::VectorXd y(n);
    for (int r = 0; r < n; ++r) {
        X(r, 0) = 1.0;
        for (int c = 0; c < p; ++c)
            X(r, c + 1) = d.at(r, parents[c]);
        y(r) = d.at(r, x);
    }
    Eigen::VectorXd beta = (X.transpose() * X).ldlt().solve(X.transpose() * y);
    Eigen::VectorXd resid = y - X * beta;
    return resid.squaredNorm() / (n - 1);
}

} // namespace

TEST_CASE("dataset constructor validates its shape")
{
    CHECK_THROWS_AS(Dataset({"a"}, {1.0, 2.0}, 2, 2), DimensionMismatch);
    CHECK_THROWS_AS(Dataset({"a", "b"}, {1.0, 2.0, 3.0}, 2, 2), DimensionMismatch);
    Dataset d = tiny_dataset();
    CHECK(d.n() == 4);
    CHECK(d.m() == 2);
    CHECK(d.at(2, 1) == 6.0);
}

TEST_CASE("covariance matches hand computation with n-1 divisor")
{
    CovarianceModel c = covariance(tiny_dataset());
    // a: mean 2.5, b: mean 5.25.
    CHECK(c.n() == 4);
    CHECK(c.cov()(0, 0) == doctest::Approx(5.0 / 3.0));
    CHECK(c.cov()(1, 1) == doctest::Approx(26.75 / 3.0));
    CHECK(c.cov()(0, 1) == doctest::Approx(11.5 / 3.0));
    CHECK(c.cov()(0, 1) == c.cov()(1, 0));
}

TEST_CASE("constant columns are rejected")
{
    Dataset d({"a", "b"}, {1.0, 5.0, 2.0, 5.0, 3.0, 5.0}, 3, 2);
    CHECK_THROWS_AS(covariance(d), DegenerateData);
}

TEST_CASE("local score matches an independent least-squares fit")
{
    Dataset d = simulated(5, 2.5, 500, 42);
    CovarianceModel c = covariance(d);
    const double n = d.n();
    for (int x = 0; x < 5; ++x) {
        std::vector<std::vector<int>> parent_sets = {{}, {(x + 1) % 5}, {(x + 1) % 5, (x + 2) % 5}};
        for (const auto& parents : parent_sets) {
            const double sigma2 = residual_variance(d, x, parents);
            const double expected =
                -n * std::log(sigma2) - 2.0 * static_cast<double>(parents.size()) * std::log(n);
            CHECK(local_bic(c, x, parents, 2.0) == doctest::Approx(expected).epsilon(1e-9));
        }
    }
}

TEST_CASE("empty parent set scores the marginal variance")
{
    CovarianceModel c = covariance(tiny_dataset());
    CHECK(local_bic(c, 0, {}, 2.0) == doctest::Approx(-4.0 * std::log(5.0 / 3.0)));
}

TEST_CASE("penalty multiplier scales the complexity term")
{
    Dataset d = simulated(4, 2.0, 300, 7);
    CovarianceModel c = covariance(d);
    const double lenient = local_bic(c, 0, {1, 2}, 1.0);
    const double strict = local_bic(c, 0, {1, 2}, 3.0);
    CHECK(lenient - strict == doctest::Approx(2.0 * 2.0 * std::log(300.0)));
}

TEST_CASE("graph score decomposes over families and ignores the cache")
{
    Dataset d = simulated(6, 3.0, 400, 99);
    CovarianceModel c = covariance(d);
    SimConfig cfg{6, 3.0, 1, -1.0, 1.0, 1.0, 77};
    Dag g = random_dag(cfg);

    double by_families = 0.0;
    for (int k = 0; k < 6; ++k)
        by_families += local_bic(c, k, g.parents(k), 2.0);
    CHECK(graph_bic(c, g, 2.0) == doctest::Approx(by_families));

    ScoreCache cache;
    const double cold = graph_bic(c, g, 2.0, &cache);
    const double warm = graph_bic(c, g, 2.0, &cache);
    CHECK(cold == warm);
    CHECK(cold == graph_bic(c, g, 2.0));
    CHECK(cache.hits() > 0);
    CHECK(cache.size() > 0);
}

TEST_CASE("Markov-equivalent graphs receive the same score")
{
    Dataset d = simulated(3, 1.5, 1000, 5);
    CovarianceModel c = covariance(d);
    Dag chain(3, {{0, 1}, {1, 2}});
    Dag reversed(3, {{2, 1}, {1, 0}});
    Dag fork(3, {{1, 0}, {1, 2}});
    const double s = graph_bic(c, chain, 2.0);
    CHECK(graph_bic(c, reversed, 2.0) == doctest::Approx(s).epsilon(1e-9));
    CHECK(graph_bic(c, fork, 2.0) == doctest::Approx(s).epsilon(1e-9));
}

TEST_CASE("bounded caches stop inserting at capacity")
{
    ScoreCache cache(2);
    cache.insert(0, {}, 4, 1.0);
    cache.insert(1, {}, 4, 2.0);
    cache.insert(2, {}, 4, 3.0);
    CHECK(cache.size() == 2);
    CHECK(cache.lookup(0, {}, 4) == 1.0);
    CHECK_FALSE(cache.lookup(2, {}, 4).has_value());
}

TEST_CASE("oracle scorer counts edges and compares exactly")
{
    auto o = IndependenceOracle::from_dag(Dag(3, {{0, 2}, {1, 2}}));
    Scorer s = Scorer::oracle(o);
    CHECK(s.vertex_count() == 3);

    auto [g1, score1] = s.evaluate(Permutation({0, 1, 2}));
    CHECK(g1.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
    CHECK(score1 == -2.0);

    auto [g2, score2] = s.evaluate(Permutation({2, 0, 1}));
    CHECK(g2.edge_count() == 3);
    CHECK(score2 == -3.0);

    CHECK(s.improves(score1, score2));
    CHECK_FALSE(s.improves(score2, score1));
    CHECK_FALSE(s.improves(score1, score1));
    CHECK(s.ties(score1, score1));
    CHECK_FALSE(s.ties(score1, score2));
}

TEST_CASE("sample scorer applies a strictness margin to comparisons")
{
    Dataset d = simulated(4, 2.0, 300, 3);
    CovarianceModel c = covariance(d);
    ScoreCache cache;
    Scorer s = Scorer::sample(c, 2.0, cache);
    CHECK(s.ties(10.0, 10.0 + 5e-11));
    CHECK_FALSE(s.improves(10.0 + 5e-11, 10.0));
    CHECK(s.improves(10.0 + 1e-9, 10.0));
}

TEST_CASE("sample scorer projection score equals the graph score it induces")
{
    Dataset d = simulated(6, 3.0, 800, 21);
    CovarianceModel c = covariance(d);
    ScoreCache cache;
    Scorer s = Scorer::sample(c, 2.0, cache);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto rng = make_stream(seed, 7);
        Permutation p(random_order(6, rng));
        auto [g, score] = s.evaluate(p);
        CHECK(score == doctest::Approx(graph_bic(c, g, 2.0)).epsilon(1e-9));
        auto [g2, score2] = permutation_score(s, p);
        CHECK(g2.edges() == g.edges());
        CHECK(score2 == score);
    }
}

TEST_CASE("sample scorer needs enough rows for regression")
{
    Dataset d = simulated(5, 2.0, 6, 9);
    CovarianceModel c = covariance(d);
    ScoreCache cache;
    CHECK_THROWS_AS(Scorer::sample(c, 2.0, cache), DegenerateData);
}
