#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "grasp/dag.hpp"
#include "grasp/scoring.hpp"

namespace grasp {

// Knobs for one synthetic problem: an m-vertex random DAG with the given
// expected total degree, and n samples of the linear-Gaussian model over it.
struct SimConfig {
    int m = 0;
    double avg_degree = 0.0;
    long n = 0;
    double coef_low = -1.0;
    double coef_high = 1.0;
    double noise_sd = 1.0;
    std::uint64_t seed = 0;

    void validate() const;
};

// Deterministic stream splitting: stream `role` of `seed` is an mt19937_64
// seeded with the (role+1)-th splitmix64 output of `seed`, so structure,
// coefficients, and noise never share draws and changing n cannot change
// the graph.
std::uint64_t splitmix64_next(std::uint64_t& state);
std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t role);

inline constexpr std::uint64_t kStructureStream = 0;
inline constexpr std::uint64_t kCoefficientStream = 1;
inline constexpr std::uint64_t kNoiseStream = 2;

// Portable draws (fixed bit-level recipes, no distribution objects):
// 53-bit uniform in [0,1), rejection-sampled integer in [0,n), Fisher-Yates
// order, and Box-Muller normals with the spare value cached.
double uniform01(std::mt19937_64& rng);
double uniform_in(std::mt19937_64& rng, double lo, double hi);
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n);
std::vector<int> random_order(int m, std::mt19937_64& rng);

class NormalSampler {
public:
    double next(std::mt19937_64& rng);

private:
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Uniform random topological order, then each forward pair becomes an edge
// independently with probability avg_degree/(m-1), giving expected total
// degree avg_degree.
Dag random_dag(const SimConfig& cfg);

// One coefficient per edge of g, uniform on [coef_low, coef_high] with
// exact zeros redrawn; entry (j, k) weights edge j->k.
Eigen::MatrixXd draw_coefficients(const Dag& g, const SimConfig& cfg);

// n samples of X_k = sum_j coef(j, k) X_j + eps_k with eps_k drawn
// N(0, noise_sd^2), evaluated in topological order. Column names X1..Xm.
Dataset sample_sem(const Dag& g, const Eigen::MatrixXd& coef, const SimConfig& cfg);

// Coefficients drawn from the coefficient stream, then sampled as above.
Dataset sample_sem(const Dag& g, const SimConfig& cfg);

} // namespace grasp
