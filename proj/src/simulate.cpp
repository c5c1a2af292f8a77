#include "grasp/simulate.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "grasp/errors.hpp"

namespace grasp {

void SimConfig::validate() const
{
    if (m < 1)
        throw InvalidQuery("variable count must be positive, got " + std::to_string(m));
    if (n < 1)
        throw InvalidQuery("sample count must be positive, got " + std::to_string(n));
    if (avg_degree < 0 || avg_degree > m - 1)
        throw InvalidQuery("avg_degree must lie in [0, m-1], got " + std::to_string(avg_degree));
    if (!(coef_low < coef_high))
        throw InvalidQuery("coefficient range must satisfy coef_low < coef_high");
    if (!(noise_sd > 0))
        throw InvalidQuery("noise_sd must be positive, got " + std::to_string(noise_sd));
}

std::uint64_t splitmix64_next(std::uint64_t& state)
{
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t role)
{
    std::uint64_t state = seed;
    std::uint64_t out = 0;
    for (std::uint64_t t = 0; t <= role; ++t)
        out = splitmix64_next(state);
    return std::mt19937_64(out);
}

double uniform01(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_in(std::mt19937_64& rng, double lo, double hi)
{
    return lo + uniform01(rng) * (hi - lo);
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n)
{
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do
        x = rng();
    while (x >= limit);
    return x % n;
}

std::vector<int> random_order(int m, std::mt19937_64& rng)
{
    std::vector<int> order(m);
    for (int v = 0; v < m; ++v)
        order[v] = v;
    for (int t = m - 1; t > 0; --t) {
        int s = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(t) + 1));
        std::swap(order[t], order[s]);
    }
    return order;
}

double NormalSampler::next(std::mt19937_64& rng)
{
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // u1 in (0,1] keeps the log finite.
    const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform01(rng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

Dag random_dag(const SimConfig& cfg)
{
    cfg.validate();
    auto rng = make_stream(cfg.seed, kStructureStream);
    std::vector<int> order = random_order(cfg.m, rng);
    const double p = cfg.m > 1 ? cfg.avg_degree / (cfg.m - 1) : 0.0;
    std::vector<Edge> edges;
    for (int s = 0; s < cfg.m; ++s)
        for (int t = s + 1; t < cfg.m; ++t)
            if (uniform01(rng) < p)
                edges.emplace_back(order[s], order[t]);
    return Dag(cfg.m, std::move(edges));
}

Eigen::MatrixXd draw_coefficients(const Dag& g, const SimConfig& cfg)
{
    cfg.validate();
    if (g.vertex_count() != cfg.m)
        throw DimensionMismatch("graph spans " + std::to_string(g.vertex_count()) +
                                " vertices, config says " + std::to_string(cfg.m));
    auto rng = make_stream(cfg.seed, kCoefficientStream);
    Eigen::MatrixXd coef = Eigen::MatrixXd::Zero(cfg.m, cfg.m);
    for (const auto& [j, k] : g.edges()) {
        double c;
        do
            c = uniform_in(rng, cfg.coef_low, cfg.coef_high);
        while (c == 0.0);
        coef(j, k) = c;
    }
    return coef;
}

Dataset sample_sem(const Dag& g, const Eigen::MatrixXd& coef, const SimConfig& cfg)
{
    cfg.validate();
    const int m = cfg.m;
    if (g.vertex_count() != m)
        throw DimensionMismatch("graph spans " + std::to_string(g.vertex_count()) +
                                " vertices, config says " + std::to_string(m));
    if (coef.rows() != m || coef.cols() != m)
        throw DimensionMismatch("coefficient matrix must be m x m");

    std::vector<std::string> names(m);
    for (int v = 0; v < m; ++v)
        names[v] = "X" + std::to_string(v + 1);

    const std::vector<int> topo = g.topological_order();
    auto rng = make_stream(cfg.seed, kNoiseStream);
    NormalSampler normal;

    std::vector<double> values(static_cast<std::size_t>(cfg.n) * m);
    std::vector<double> row(m);
    for (long r = 0; r < cfg.n; ++r) {
        for (int v = 0; v < m; ++v)
            row[v] = normal.next(rng) * cfg.noise_sd;
        for (int k : topo)
            for (int j : g.parents(k))
                row[k] += coef(j, k) * row[j];
        for (int v = 0; v < m; ++v)
            values[static_cast<std::size_t>(r) * m + v] = row[v];
    }
    return Dataset(std::move(names), std::move(values), static_cast<int>(cfg.n), m);
}

Dataset sample_sem(const Dag& g, const SimConfig& cfg)
{
    return sample_sem(g, draw_coefficients(g, cfg), cfg);
}

} // namespace grasp
