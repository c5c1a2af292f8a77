// Times the OpenMP kernels against their serial (--jobs 1) code paths and
// verifies both produce identical results. The two kernels with parallel
// inner loops are the all-permutations recovery experiment and the
// exhaustive razor-set classification.
#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "grasp/models.hpp"
#include "grasp/search.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Line {
    std::string kernel;
    double serial = 0.0;
    double parallel = 0.0;
    bool match = false;
};

void print(const Line& line)
{
    std::cout << line.kernel << ": serial " << line.serial << "s, parallel " << line.parallel
              << "s, speedup " << (line.parallel > 0 ? line.serial / line.parallel : 0.0)
              << "x, results " << (line.match ? "identical" : "DIFFER") << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Serial vs parallel kernel benchmark"};
    int jobs = 4;
    std::string model_name = "cancel_dense5";
    app.add_option("--jobs", jobs, "Thread count for the parallel runs")
        ->check(CLI::PositiveNumber);
    app.add_option("--model", model_name, "Catalog model to benchmark on");
    CLI11_PARSE(app, argc, argv);

    const auto& catalog = grasp::udag_catalog();
    const grasp::UnitModel* model = nullptr;
    for (const auto& entry : catalog)
        if (entry.name == model_name)
            model = &entry;
    if (!model) {
        std::cerr << "error: no catalog model named '" << model_name << "'\n";
        return 2;
    }
    const int m = model->truth.vertex_count();
    std::cout << "model " << model->name << " (" << m << " vertices), jobs " << jobs << "\n";

    bool all_match = true;

    {
        Line line{"recovery_test"};
        const grasp::SearchConfig cfg = grasp::SearchConfig::unbounded(2, m);
        auto t0 = std::chrono::steady_clock::now();
        grasp::RecoveryResult serial = grasp::recovery_test(*model, 2, cfg, 1);
        line.serial = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        grasp::RecoveryResult parallel = grasp::recovery_test(*model, 2, cfg, jobs);
        line.parallel = seconds_since(t0);
        line.match =
            serial.recovered == parallel.recovered && serial.failures == parallel.failures;
        all_match = all_match && line.match;
        print(line);
    }

    {
        Line line{"razor_sets"};
        grasp::IndependenceOracle oracle = model->oracle();
        auto t0 = std::chrono::steady_clock::now();
        grasp::RazorSets serial = grasp::razor_sets(oracle, m, 1);
        line.serial = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        grasp::RazorSets parallel = grasp::razor_sets(oracle, m, jobs);
        line.parallel = seconds_since(t0);
        line.match = serial.cmc == parallel.cmc && serial.sgs == parallel.sgs &&
                     serial.frugal == parallel.frugal && serial.u_frugal == parallel.u_frugal &&
                     serial.p_minimal == parallel.p_minimal &&
                     serial.u_p_minimal == parallel.u_p_minimal &&
                     serial.faithful == parallel.faithful;
        all_match = all_match && line.match;
        print(line);
    }

    return all_match ? 0 : 2;
}
