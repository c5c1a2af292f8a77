#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grasp/errors.hpp"
#include "grasp/io.hpp"
#include "grasp/metrics.hpp"
#include "grasp/models.hpp"
#include "grasp/search.hpp"
#include "grasp/simulate.hpp"
#include "grasp/version.hpp"

namespace {

using grasp::Dag;
using grasp::Dataset;
using grasp::Permutation;
using grasp::Scorer;
using grasp::SearchConfig;
using json = nlohmann::json;

// Random-start orders draw from this stream; structure/coefficients/noise
// use streams 0..2.
constexpr std::uint64_t kStartStream = 3;

std::string iso_utc(std::chrono::system_clock::time_point tp)
{
    std::time_t t = std::chrono::system_clock::to_time_t(tp);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

class Stopwatch {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct ManifestInfo {
    std::string command;
    std::string argv_line;
    json config;
    std::uint64_t seed = 0;
    std::string started_at;
};

void write_manifest(const std::string& path, const ManifestInfo& info, double seconds)
{
    json j{{"command", info.command},
           {"argv", info.argv_line},
           {"config", info.config},
           {"seed", info.seed},
           {"started_at", info.started_at},
           {"finished_at", iso_utc(std::chrono::system_clock::now())},
           {"seconds", seconds},
           {"library_version", grasp::kLibraryVersion}};
    std::ofstream out(path);
    if (!out)
        throw grasp::ParseError("cannot open '" + path + "' for writing");
    out << j.dump(2) << "\n";
}

int env_jobs()
{
    const char* v = std::getenv("GRASP_JOBS");
    if (!v)
        return 1;
    int jobs = std::atoi(v);
    return jobs >= 1 ? jobs : 1;
}

std::string join_argv(int argc, char** argv)
{
    std::string line;
    for (int a = 0; a < argc; ++a) {
        if (a)
            line += ' ';
        line += argv[a];
    }
    return line;
}

Permutation parse_initial(const std::string& text, int m)
{
    std::vector<int> order;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        order.push_back(std::stoi(tok) - 1);
    if (static_cast<int>(order.size()) != m)
        throw grasp::InvalidQuery("initial permutation lists " + std::to_string(order.size()) +
                                  " vertices, model has " + std::to_string(m));
    return Permutation(std::move(order));
}

// Graph files may hold a DAG or a CPDAG; a fully directed file is read as a
// DAG and converted, anything with `--` lines is taken as a pattern as-is.
grasp::Cpdag read_pattern_file(const std::string& path)
{
    grasp::Cpdag pattern = grasp::read_cpdag_file(path);
    if (!pattern.undirected_edges().empty())
        return pattern;
    std::vector<grasp::Edge> edges(pattern.directed_edges());
    return grasp::to_cpdag(Dag(pattern.vertex_count(), std::move(edges)));
}

std::vector<Permutation> start_permutations(int m, int starts, std::uint64_t seed)
{
    std::vector<Permutation> out;
    out.reserve(starts);
    out.push_back(Permutation::identity(m));
    auto rng = grasp::make_stream(seed, kStartStream);
    for (int s = 1; s < starts; ++s)
        out.emplace_back(grasp::random_order(m, rng));
    return out;
}

struct StartResult {
    std::optional<Permutation> perm;
    double score = 0.0;
    Dag dag{1, {}};
};

// Runs grasp from each start; make_scorer is invoked once per start so every
// worker owns its caches. Best score wins, earliest start breaking ties.
template <typename MakeScorer>
std::pair<StartResult, int> multi_start(const std::vector<Permutation>& starts,
                                        const SearchConfig& cfg, int jobs,
                                        const MakeScorer& make_scorer)
{
    const int total = static_cast<int>(starts.size());
    std::vector<StartResult> results(total);

    auto run_one = [&](int s) {
        auto holder = make_scorer();
        Scorer& scorer = holder.scorer;
        Permutation out = grasp::grasp(scorer, starts[s], cfg);
        auto [g, score] = scorer.evaluate(out);
        results[s] = StartResult{std::move(out), score, std::move(g)};
    };

    if (jobs <= 1) {
        for (int s = 0; s < total; ++s)
            run_one(s);
    } else {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (int s = 0; s < total; ++s)
            run_one(s);
    }

    auto comparator = make_scorer();
    int best = 0;
    for (int s = 1; s < total; ++s)
        if (comparator.scorer.improves(results[s].score, results[best].score))
            best = s;
    return {std::move(results[best]), best};
}

struct OracleScorerHolder {
    Scorer scorer;
};

struct SampleScorerHolder {
    // The cache must outlive the scorer referencing it.
    std::unique_ptr<grasp::ScoreCache> cache;
    Scorer scorer;
};

int run_app(int argc, char** argv)
{
    CLI::App app{"Permutation-based causal structure discovery"};
    app.set_version_flag("--version", grasp::kLibraryVersion);
    app.require_subcommand(1);
    const std::string argv_line = join_argv(argc, argv);

    // ---- simulate ----------------------------------------------------
    struct {
        int vars = 0;
        double avg_degree = 0.0;
        long n = 0;
        double coef_low = -1.0;
        double coef_high = 1.0;
        double noise_sd = 1.0;
        std::uint64_t seed = 0;
        std::string out_prefix;
    } sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Write a random DAG and samples of its "
                                                   "linear-Gaussian model");
    sim_cmd->add_option("--vars", sim.vars, "Variable count")->required();
    sim_cmd->add_option("--avg-degree", sim.avg_degree, "Expected total degree")->required();
    sim_cmd->add_option("--n", sim.n, "Sample count")->required();
    sim_cmd->add_option("--coef-low", sim.coef_low, "Coefficient lower bound");
    sim_cmd->add_option("--coef-high", sim.coef_high, "Coefficient upper bound");
    sim_cmd->add_option("--noise-sd", sim.noise_sd, "Noise standard deviation");
    sim_cmd->add_option("--seed", sim.seed, "Random seed");
    sim_cmd->add_option("--out-prefix", sim.out_prefix, "Output path prefix")->required();
    sim_cmd->callback([&] {
        Stopwatch clock;
        grasp::SimConfig cfg{sim.vars, sim.avg_degree, sim.n,     sim.coef_low,
                             sim.coef_high, sim.noise_sd,  sim.seed};
        cfg.validate();
        json config{{"vars", cfg.m},           {"avg_degree", cfg.avg_degree},
                    {"n", cfg.n},              {"coef_low", cfg.coef_low},
                    {"coef_high", cfg.coef_high}, {"noise_sd", cfg.noise_sd},
                    {"seed", cfg.seed}};
        ManifestInfo info{"simulate", argv_line, config, cfg.seed,
                          iso_utc(std::chrono::system_clock::now())};

        Dag truth = grasp::random_dag(cfg);
        Dataset data = grasp::sample_sem(truth, cfg);

        const std::string manifest_line = "# manifest " + config.dump();
        {
            std::ofstream out(sim.out_prefix + ".data.csv");
            if (!out)
                throw grasp::ParseError("cannot open '" + sim.out_prefix +
                                        ".data.csv' for writing");
            out << manifest_line << "\n";
            grasp::write_dataset(out, data);
        }
        {
            std::ofstream out(sim.out_prefix + ".truth.dag");
            if (!out)
                throw grasp::ParseError("cannot open '" + sim.out_prefix +
                                        ".truth.dag' for writing");
            out << manifest_line << "\n";
            grasp::write_dag(out, truth);
        }
        write_manifest(sim.out_prefix + ".manifest.json", info, clock.seconds());
        std::cout << "wrote " << sim.out_prefix << ".data.csv (" << data.n() << " x " << data.m()
                  << "), " << sim.out_prefix << ".truth.dag (" << truth.edge_count()
                  << " edges)\n";
    });

    // ---- search -------------------------------------------------------
    struct {
        std::string data;
        int tier = 2;
        int depth = 3;
        int uncovered_depth = 1;
        int nonsingular_depth = 1;
        bool unbounded = false;
        double penalty = 2.0;
        std::uint64_t seed = 0;
        int starts = 1;
        int jobs = env_jobs();
        std::string out_prefix;
    } sea;
    auto* sea_cmd = app.add_subcommand("search", "Estimate a DAG from a dataset by tuck search "
                                                 "over the BIC score");
    sea_cmd->add_option("--data", sea.data, "Dataset CSV")->required();
    sea_cmd->add_option("--tier", sea.tier, "Edge class searched: 0, 1, or 2")
        ->check(CLI::Range(0, 2));
    sea_cmd->add_option("--depth", sea.depth, "Covered-tuck recursion bound");
    sea_cmd->add_option("--uncovered-depth", sea.uncovered_depth, "Uncovered-tuck bound");
    sea_cmd->add_option("--nonsingular-depth", sea.nonsingular_depth, "Nonsingular-tuck bound");
    sea_cmd->add_flag("--unbounded", sea.unbounded, "Raise every depth bound to m^2");
    sea_cmd->add_option("--penalty", sea.penalty, "BIC penalty multiplier");
    sea_cmd->add_option("--seed", sea.seed, "Seed for random restarts");
    sea_cmd->add_option("--starts", sea.starts, "Restart count; start 1 is the identity")
        ->check(CLI::PositiveNumber);
    sea_cmd->add_option("--jobs", sea.jobs, "Worker threads (default $GRASP_JOBS or 1)");
    sea_cmd->add_option("--out-prefix", sea.out_prefix, "Output path prefix")->required();
    sea_cmd->callback([&] {
        Stopwatch clock;
        Dataset data = grasp::read_dataset_file(sea.data);
        grasp::CovarianceModel cov = grasp::covariance(data);
        const int m = cov.m();
        SearchConfig cfg;
        if (sea.unbounded) {
            cfg = SearchConfig::unbounded(sea.tier, m);
        } else {
            cfg.tier = sea.tier;
            cfg.depth = sea.depth;
            cfg.uncovered_depth = sea.uncovered_depth;
            cfg.nonsingular_depth = sea.nonsingular_depth;
        }
        cfg.seed = sea.seed;
        cfg.validate();

        json config{{"data", sea.data},       {"tier", cfg.tier},
                    {"depth", cfg.depth},     {"uncovered_depth", cfg.uncovered_depth},
                    {"nonsingular_depth", cfg.nonsingular_depth},
                    {"penalty", sea.penalty}, {"seed", sea.seed},
                    {"starts", sea.starts},   {"jobs", sea.jobs}};
        ManifestInfo info{"search", argv_line, config, sea.seed,
                          iso_utc(std::chrono::system_clock::now())};

        auto starts = start_permutations(m, sea.starts, sea.seed);
        auto make_scorer = [&] {
            auto cache = std::make_unique<grasp::ScoreCache>();
            Scorer scorer = Scorer::sample(cov, sea.penalty, *cache);
            return SampleScorerHolder{std::move(cache), std::move(scorer)};
        };
        auto [best, start_index] = multi_start(starts, cfg, sea.jobs, make_scorer);

        grasp::write_dag_file(sea.out_prefix + ".est.dag", best.dag);
        grasp::write_cpdag_file(sea.out_prefix + ".est.cpdag", grasp::to_cpdag(best.dag));
        write_manifest(sea.out_prefix + ".manifest.json", info, clock.seconds());
        std::cout << "edges " << best.dag.edge_count() << "\nscore " << best.score
                  << "\nstart " << start_index + 1 << " of " << sea.starts << "\n";
    });

    // ---- oracle-search --------------------------------------------------
    struct {
        std::string model;
        int tier = 2;
        int depth = 3;
        int uncovered_depth = 1;
        int nonsingular_depth = 1;
        bool unbounded = false;
        std::string initial;
        std::uint64_t seed = 0;
        int starts = 1;
        int jobs = env_jobs();
        std::string out_prefix;
    } osea;
    auto* osea_cmd = app.add_subcommand("oracle-search", "Run the tuck search against the "
                                                         "independence oracle of a model file");
    osea_cmd->add_option("--model", osea.model, "Model file (dag block + optional ci block)")
        ->required();
    osea_cmd->add_option("--tier", osea.tier, "Edge class searched: 0, 1, or 2")
        ->check(CLI::Range(0, 2));
    osea_cmd->add_option("--depth", osea.depth, "Covered-tuck recursion bound");
    osea_cmd->add_option("--uncovered-depth", osea.uncovered_depth, "Uncovered-tuck bound");
    osea_cmd->add_option("--nonsingular-depth", osea.nonsingular_depth,
                         "Nonsingular-tuck bound");
    osea_cmd->add_flag("--unbounded", osea.unbounded, "Raise every depth bound to m^2");
    osea_cmd->add_option("--initial", osea.initial,
                         "Start permutation, 1-based comma-separated (default identity)");
    osea_cmd->add_option("--seed", osea.seed, "Seed for random restarts");
    osea_cmd->add_option("--starts", osea.starts,
                         "Restart count; ignored when --initial is given")
        ->check(CLI::PositiveNumber);
    osea_cmd->add_option("--jobs", osea.jobs, "Worker threads (default $GRASP_JOBS or 1)");
    osea_cmd->add_option("--out-prefix", osea.out_prefix, "Output path prefix")->required();
    osea_cmd->callback([&] {
        Stopwatch clock;
        grasp::ModelFile model = grasp::read_model_file(osea.model);
        grasp::IndependenceOracle oracle =
            grasp::IndependenceOracle::augmented(model.dag, model.extra);
        const int m = oracle.vertex_count();
        SearchConfig cfg;
        if (osea.unbounded) {
            cfg = SearchConfig::unbounded(osea.tier, m);
        } else {
            cfg.tier = osea.tier;
            cfg.depth = osea.depth;
            cfg.uncovered_depth = osea.uncovered_depth;
            cfg.nonsingular_depth = osea.nonsingular_depth;
        }
        cfg.seed = osea.seed;
        cfg.validate();

        json config{{"model", osea.model},   {"tier", cfg.tier},
                    {"depth", cfg.depth},    {"uncovered_depth", cfg.uncovered_depth},
                    {"nonsingular_depth", cfg.nonsingular_depth},
                    {"initial", osea.initial}, {"seed", osea.seed},
                    {"starts", osea.starts}, {"jobs", osea.jobs}};
        ManifestInfo info{"oracle-search", argv_line, config, osea.seed,
                          iso_utc(std::chrono::system_clock::now())};

        std::vector<Permutation> starts;
        if (!osea.initial.empty())
            starts.push_back(parse_initial(osea.initial, m));
        else
            starts = start_permutations(m, osea.starts, osea.seed);
        auto make_scorer = [&] { return OracleScorerHolder{Scorer::oracle(oracle)}; };
        auto [best, start_index] = multi_start(starts, cfg, osea.jobs, make_scorer);

        grasp::write_dag_file(osea.out_prefix + ".est.dag", best.dag);
        write_manifest(osea.out_prefix + ".manifest.json", info, clock.seconds());
        std::cout << "edges " << best.dag.edge_count() << "\nscore " << best.score
                  << "\nstart " << start_index + 1 << " of " << starts.size() << "\n";
    });

    // ---- eval -----------------------------------------------------------
    struct {
        std::string est;
        std::string truth;
        std::string run_id = "eval";
        double avg_degree = 0.0;
        long n = 0;
        int tier = 0;
        double seconds = 0.0;
    } ev;
    auto* ev_cmd = app.add_subcommand("eval", "Score an estimated graph against a truth graph "
                                              "on their completed patterns");
    ev_cmd->add_option("--est", ev.est, "Estimated DAG or CPDAG file")->required();
    ev_cmd->add_option("--truth", ev.truth, "True DAG or CPDAG file")->required();
    ev_cmd->add_option("--run-id", ev.run_id, "Identifier for the CSV row");
    ev_cmd->add_option("--avg-degree", ev.avg_degree, "Echoed into the CSV row");
    ev_cmd->add_option("--n", ev.n, "Echoed into the CSV row");
    ev_cmd->add_option("--tier", ev.tier, "Echoed into the CSV row");
    ev_cmd->add_option("--seconds", ev.seconds, "Echoed into the CSV row");
    ev_cmd->callback([&] {
        grasp::Cpdag est = read_pattern_file(ev.est);
        grasp::Cpdag truth = read_pattern_file(ev.truth);
        grasp::RunRow row;
        row.run_id = ev.run_id;
        row.m = truth.vertex_count();
        row.avg_degree = ev.avg_degree;
        row.n = ev.n;
        row.tier = ev.tier;
        row.seconds = ev.seconds;
        auto adj = grasp::adjacency_confusion(est, truth);
        auto arrow = grasp::arrowhead_confusion(est, truth);
        row.adjacency = grasp::precision_recall(adj);
        row.arrowhead = grasp::precision_recall(arrow);
        row.est_edges =
            static_cast<long>(est.directed_edges().size() + est.undirected_edges().size());
        row.truth_edges =
            static_cast<long>(truth.directed_edges().size() + truth.undirected_edges().size());
        auto cell = [](const std::optional<double>& v) {
            if (!v)
                return std::string();
            std::ostringstream s;
            s.precision(6);
            s << *v;
            return s.str();
        };
        std::cout << grasp::run_csv_header() << ",adj_f1,arrow_f1\n"
                  << grasp::run_csv_row(row) << ',' << cell(row.adjacency.f1) << ','
                  << cell(row.arrowhead.f1) << "\n";
    });

    // ---- unit-tests -------------------------------------------------------
    struct {
        int jobs = env_jobs();
        std::string out;
    } ut;
    auto* ut_cmd = app.add_subcommand("unit-tests", "Run the all-permutations recovery "
                                                    "experiment over the bundled catalog");
    ut_cmd->add_option("--jobs", ut.jobs, "Worker threads (default $GRASP_JOBS or 1)");
    ut_cmd->add_option("--out", ut.out, "Write the CSV here instead of stdout");
    ut_cmd->callback([&] {
        std::ostringstream csv;
        csv << "model,tier,recovered,failures\n";
        int recovered[3] = {0, 0, 0};
        int total = 0;
        for (const auto& model : grasp::udag_catalog()) {
            const bool counted = model.name.rfind("udag_", 0) == 0;
            if (counted)
                ++total;
            const int m = model.truth.vertex_count();
            for (int tier = 0; tier <= 2; ++tier) {
                auto result =
                    grasp::recovery_test(model, tier, SearchConfig::unbounded(tier, m), ut.jobs);
                csv << model.name << ',' << tier << ',' << (result.recovered ? 1 : 0) << ','
                    << result.failures.size() << "\n";
                if (counted && result.recovered)
                    ++recovered[tier];
            }
        }
        for (int tier = 0; tier <= 2; ++tier)
            csv << "summary," << tier << ',' << recovered[tier] << ',' << total << "\n";
        if (ut.out.empty()) {
            std::cout << csv.str();
        } else {
            std::ofstream out(ut.out);
            if (!out)
                throw grasp::ParseError("cannot open '" + ut.out + "' for writing");
            out << csv.str();
            std::cout << "wrote " << ut.out << "\n";
        }
    });

    // ---- benchmark ---------------------------------------------------------
    struct {
        std::vector<int> vars;
        std::vector<double> degrees;
        std::vector<long> ns;
        std::vector<int> tiers{2};
        int reps = 1;
        double penalty = 2.0;
        std::uint64_t seed = 0;
        int jobs = env_jobs();
        std::string out_dir;
    } be;
    auto* be_cmd = app.add_subcommand("benchmark", "Full factorial of simulate + search + eval "
                                                   "with per-cell means");
    be_cmd->add_option("--vars", be.vars, "Variable counts")->required()->delimiter(',');
    be_cmd->add_option("--avg-degrees", be.degrees, "Average degrees")->required()->delimiter(',');
    be_cmd->add_option("--ns", be.ns, "Sample counts")->required()->delimiter(',');
    be_cmd->add_option("--tiers", be.tiers, "Tiers to run")->delimiter(',');
    be_cmd->add_option("--reps", be.reps, "Repetitions per cell")->check(CLI::PositiveNumber);
    be_cmd->add_option("--penalty", be.penalty, "BIC penalty multiplier");
    be_cmd->add_option("--seed", be.seed, "Base seed; run seeds derive from it");
    be_cmd->add_option("--jobs", be.jobs, "Worker threads (default $GRASP_JOBS or 1)");
    be_cmd->add_option("--out-dir", be.out_dir, "Output directory")->required();
    be_cmd->callback([&] {
        Stopwatch clock;
        namespace fs = std::filesystem;
        fs::create_directories(be.out_dir);
        const std::string runs_path = be.out_dir + "/runs.csv";
        const std::string cells_path = be.out_dir + "/cells.csv";

        json config{{"vars", be.vars}, {"avg_degrees", be.degrees}, {"ns", be.ns},
                    {"tiers", be.tiers}, {"reps", be.reps},         {"penalty", be.penalty},
                    {"seed", be.seed},   {"jobs", be.jobs}};
        ManifestInfo info{"benchmark", argv_line, config, be.seed,
                          iso_utc(std::chrono::system_clock::now())};

        // Completed run_ids from a previous partial sweep are skipped.
        std::vector<std::string> old_lines;
        std::map<std::string, bool> done;
        if (fs::exists(runs_path)) {
            std::ifstream in(runs_path);
            std::string line;
            std::getline(in, line); // header
            while (std::getline(in, line)) {
                if (line.empty())
                    continue;
                old_lines.push_back(line);
                done[line.substr(0, line.find(','))] = true;
            }
        }

        struct Task {
            int m;
            double degree;
            long n;
            int rep;
            std::uint64_t seed;
            std::string id_prefix;
        };
        std::vector<Task> tasks;
        std::uint64_t data_index = 0;
        for (int m : be.vars)
            for (double degree : be.degrees)
                for (long n : be.ns) {
                    for (int rep = 0; rep < be.reps; ++rep) {
                        std::ostringstream id;
                        id << "m" << m << "_d" << degree << "_n" << n << "_r" << rep;
                        tasks.push_back(Task{m, degree, n, rep,
                                             be.seed + data_index * be.reps + rep, id.str()});
                    }
                    ++data_index;
                }

        auto task_done = [&](const Task& t) {
            for (int tier : be.tiers)
                if (!done.count(t.id_prefix + "_t" + std::to_string(tier)))
                    return false;
            return true;
        };

        std::vector<std::vector<std::string>> new_rows(tasks.size());
        auto run_task = [&](std::size_t ti) {
            const Task& t = tasks[ti];
            if (task_done(t))
                return;
            grasp::SimConfig sim_cfg{t.m, t.degree, t.n, -1.0, 1.0, 1.0, t.seed};
            sim_cfg.validate();
            Dag truth = grasp::random_dag(sim_cfg);
            Dataset data = grasp::sample_sem(truth, sim_cfg);
            grasp::CovarianceModel cov = grasp::covariance(data);
            grasp::Cpdag truth_pattern = grasp::to_cpdag(truth);
            for (int tier : be.tiers) {
                const std::string run_id = t.id_prefix + "_t" + std::to_string(tier);
                if (done.count(run_id))
                    continue;
                SearchConfig cfg;
                cfg.tier = tier;
                Stopwatch search_clock;
                grasp::ScoreCache cache;
                Scorer scorer = Scorer::sample(cov, be.penalty, cache);
                Permutation out = grasp::grasp(scorer, Permutation::identity(t.m), cfg);
                Dag est = scorer.evaluate(out).first;
                const double seconds = search_clock.seconds();
                grasp::Cpdag est_pattern = grasp::to_cpdag(est);

                grasp::RunRow row;
                row.run_id = run_id;
                row.m = t.m;
                row.avg_degree = t.degree;
                row.n = t.n;
                row.tier = tier;
                row.seconds = seconds;
                row.adjacency =
                    grasp::precision_recall(grasp::adjacency_confusion(est_pattern, truth_pattern));
                row.arrowhead =
                    grasp::precision_recall(grasp::arrowhead_confusion(est_pattern, truth_pattern));
                row.est_edges = est.edge_count();
                row.truth_edges = truth.edge_count();
                new_rows[ti].push_back(grasp::run_csv_row(row));
            }
        };

        if (be.jobs <= 1) {
            for (std::size_t ti = 0; ti < tasks.size(); ++ti)
                run_task(ti);
        } else {
#pragma omp parallel for schedule(dynamic) num_threads(be.jobs)
            for (std::size_t ti = 0; ti < tasks.size(); ++ti)
                run_task(ti);
        }

        std::vector<std::string> all_lines(old_lines);
        for (const auto& rows : new_rows)
            all_lines.insert(all_lines.end(), rows.begin(), rows.end());
        {
            std::ofstream out(runs_path);
            if (!out)
                throw grasp::ParseError("cannot open '" + runs_path + "' for writing");
            out << grasp::run_csv_header() << "\n";
            for (const auto& line : all_lines)
                out << line << "\n";
        }

        // Cell means recomputed from every row, absent quotients excluded.
        struct Cell {
            grasp::MeanAccumulator seconds, ap, ar, ahp, ahr;
            int runs = 0;
        };
        std::map<std::string, Cell> cells;
        auto opt_cell = [](const std::string& s) -> std::optional<double> {
            if (s.empty())
                return std::nullopt;
            return std::stod(s);
        };
        for (const auto& line : all_lines) {
            std::vector<std::string> f;
            std::stringstream ss(line);
            std::string tok;
            while (std::getline(ss, tok, ','))
                f.push_back(tok);
            f.resize(12);
            const std::string key = f[1] + "," + f[2] + "," + f[3] + "," + f[4];
            Cell& c = cells[key];
            ++c.runs;
            c.seconds.add(opt_cell(f[5]));
            c.ap.add(opt_cell(f[6]));
            c.ar.add(opt_cell(f[7]));
            c.ahp.add(opt_cell(f[8]));
            c.ahr.add(opt_cell(f[9]));
        }
        {
            std::ofstream out(cells_path);
            if (!out)
                throw grasp::ParseError("cannot open '" + cells_path + "' for writing");
            out << "m,avg_degree,n,tier,runs,seconds,adj_precision,adj_recall,arrow_precision,"
                   "arrow_recall,adj_valid,arrow_valid\n";
            auto fmt = [](const std::optional<double>& v) {
                if (!v)
                    return std::string();
                std::ostringstream s;
                s.precision(6);
                s << *v;
                return s.str();
            };
            for (const auto& [key, c] : cells)
                out << key << ',' << c.runs << ',' << fmt(c.seconds.mean()) << ','
                    << fmt(c.ap.mean()) << ',' << fmt(c.ar.mean()) << ',' << fmt(c.ahp.mean())
                    << ',' << fmt(c.ahr.mean()) << ',' << c.ap.count() << ',' << c.ahp.count()
                    << "\n";
        }
        write_manifest(be.out_dir + "/manifest.json", info, clock.seconds());
        std::cout << "wrote " << runs_path << " (" << all_lines.size() << " runs), " << cells_path
                  << " (" << cells.size() << " cells)\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run_app(argc, argv);
    } catch (const grasp::GraspError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
