#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "grasp/errors.hpp"
#include "grasp/models.hpp"
#include "grasp/simulate.hpp"

using namespace grasp;

namespace {

const UnitModel& catalog_model(const std::string& name)
{
    for (const auto& entry : udag_catalog())
        if (entry.name == name)
            return entry;
    throw std::runtime_error("missing catalog model " + name);
}

bool subset(const std::vector<DagFingerprint>& a, const std::vector<DagFingerprint>& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

TEST_CASE("catalog shape: 61 path-cancellation models plus 3 baseline models")
{
    const auto& catalog = udag_catalog();
    CHECK(catalog.size() == 64);

    std::set<std::string> names;
    int udags = 0;
    for (const auto& model : catalog) {
        names.insert(model.name);
        if (model.name.rfind("udag_", 0) == 0) {
            ++udags;
            CHECK(model.truth.vertex_count() == 5);
            CHECK_FALSE(model.extra_ci.empty());
        }
        CHECK(model.expected_sparsest_edges == model.truth.edge_count());
    }
    CHECK(udags == 61);
    CHECK(names.size() == 64); // unique names
    CHECK(names.count("faithful_collider") == 1);
    CHECK(names.count("cancel_square4") == 1);
    CHECK(names.count("cancel_dense5") == 1);
}

TEST_CASE("the first catalog entry matches its published definition")
{
    const UnitModel& m = catalog_model("udag_01");
    CHECK(m.truth.edges() ==
          std::vector<Edge>{{0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(m.extra_ci.size() == 8);
    CHECK(std::count(m.extra_ci.begin(), m.extra_ci.end(), CiStatement(0, 4, {})) == 1);
}

TEST_CASE("extra statements are genuinely unfaithful additions")
{
    for (const auto& model : udag_catalog()) {
        auto oracle = model.oracle();
        for (const auto& s : model.extra_ci) {
            // Not a separation of the truth graph, yet answered true.
            CHECK_FALSE(d_separated(model.truth, s.i, s.j, s.z));
            CHECK(oracle.ci(s.i, s.j, s.z));
        }
        // The oracle still answers the truth graph's separations.
        auto dsep = all_dsep_statements(model.truth);
        for (const auto& s : dsep)
            CHECK(oracle.ci(s.i, s.j, s.z));
    }
}

TEST_CASE("exhaustive sparsest search confirms the recorded optimum")
{
    for (const auto& model : udag_catalog()) {
        auto oracle = model.oracle();
        std::vector<Dag> sparsest = sp_exhaustive(oracle, oracle.vertex_count());
        REQUIRE_FALSE(sparsest.empty());
        for (const auto& g : sparsest)
            CHECK(g.edge_count() == model.expected_sparsest_edges);
        // The truth graph itself attains the optimum.
        bool truth_found = false;
        for (const auto& g : sparsest)
            truth_found = truth_found || markov_equivalent(g, model.truth);
        CHECK(truth_found);
    }
}

TEST_CASE("collider model recovers at every tier from every start")
{
    const UnitModel& m = catalog_model("faithful_collider");
    for (int tier = 0; tier <= 2; ++tier) {
        RecoveryResult r = recovery_test(m, tier, SearchConfig::unbounded(tier, 3));
        CHECK(r.recovered);
        CHECK(r.failures.empty());
    }
}

TEST_CASE("cancelled square: full tucks succeed where singular tucks fail")
{
    const UnitModel& m = catalog_model("cancel_square4");
    RecoveryResult tier1 = recovery_test(m, 1, SearchConfig::unbounded(1, 4));
    CHECK_FALSE(tier1.recovered);
    CHECK_FALSE(tier1.failures.empty());
    // The witness start is among the failures.
    bool witness = false;
    for (const auto& p : tier1.failures)
        witness = witness || p == Permutation({1, 3, 0, 2});
    CHECK(witness);

    RecoveryResult tier2 = recovery_test(m, 2, SearchConfig::unbounded(2, 4));
    CHECK(tier2.recovered);
    CHECK(tier2.failures.empty());
}

TEST_CASE("dense five-vertex cancellation defeats even full tucks")
{
    const UnitModel& m = catalog_model("cancel_dense5");
    RecoveryResult r = recovery_test(m, 2, SearchConfig::unbounded(2, 5));
    CHECK_FALSE(r.recovered);
    bool witness = false;
    for (const auto& p : r.failures)
        witness = witness || p == Permutation({4, 0, 2, 3, 1});
    CHECK(witness);
}

TEST_CASE("recovery guards its input size")
{
    UnitModel big{"too_big", Dag(8, {}), {}, 0};
    CHECK_THROWS_AS(recovery_test(big, 0, SearchConfig::unbounded(0, 8)), TooLarge);
}

TEST_CASE("razor sets on the three-vertex chain match hand enumeration")
{
    auto oracle = IndependenceOracle::from_dag(Dag(3, {{0, 1}, {1, 2}}));
    RazorSets r = razor_sets(oracle, 3);

    // 25 DAGs on three vertices: 6 complete ones are Markovian with no
    // separations, the 3-member chain class matches exactly, nothing else.
    CHECK(r.cmc.size() == 9);
    // Of the complete graphs, the four ordering vertex 1 first or in the
    // middle contain a Markovian two-edge subgraph (the fork or a chain),
    // so only the two ordering vertex 1 last are subgraph-minimal.
    CHECK(r.sgs.size() == 5);
    std::vector<DagFingerprint> sgs_complete{
        fingerprint(Dag(3, {{0, 2}, {0, 1}, {2, 1}})),  // order 0,2,1
        fingerprint(Dag(3, {{2, 0}, {2, 1}, {0, 1}}))}; // order 2,0,1
    for (const auto& fp : sgs_complete)
        CHECK(std::binary_search(r.sgs.begin(), r.sgs.end(), fp));
    CHECK(r.frugal.size() == 3);
    CHECK(r.u_frugal == r.frugal);
    CHECK(r.p_minimal == r.frugal);
    CHECK(r.u_p_minimal == r.frugal);
    CHECK(r.faithful == r.frugal);

    std::vector<DagFingerprint> chain_class{fingerprint(Dag(3, {{0, 1}, {1, 2}})),
                                            fingerprint(Dag(3, {{1, 0}, {1, 2}})),
                                            fingerprint(Dag(3, {{2, 1}, {1, 0}}))};
    std::sort(chain_class.begin(), chain_class.end());
    CHECK(r.faithful == chain_class);
}

TEST_CASE("razor sets nest per the hierarchy on random faithful models")
{
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const int m = 2 + static_cast<int>(seed % 3);
        SimConfig cfg{m, (m - 1) * 0.6, 1, -1.0, 1.0, 1.0, 600 + seed};
        Dag truth = random_dag(cfg);
        auto oracle = IndependenceOracle::from_dag(truth);
        RazorSets r = razor_sets(oracle, m);

        CHECK(r.u_p_minimal == r.faithful);
        CHECK(subset(r.faithful, r.u_frugal));
        CHECK(subset(r.u_frugal, r.frugal));
        CHECK(subset(r.frugal, r.p_minimal));
        CHECK(subset(r.p_minimal, r.sgs));
        CHECK(subset(r.sgs, r.cmc));

        // Faithful oracles: the faithful class is the truth's class and the
        // middle razors collapse onto it.
        CHECK_FALSE(r.faithful.empty());
        CHECK(std::binary_search(r.faithful.begin(), r.faithful.end(), fingerprint(truth)));
        CHECK(r.u_frugal == r.faithful);
        CHECK(r.frugal == r.faithful);
        CHECK(r.p_minimal == r.faithful);
    }
}

TEST_CASE("u-variants are all-or-nothing restrictions of their base class")
{
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        SimConfig cfg{4, 1.8, 1, -1.0, 1.0, 1.0, 700 + seed};
        auto oracle = IndependenceOracle::from_dag(random_dag(cfg));
        RazorSets r = razor_sets(oracle, 4);
        CHECK((r.u_frugal.empty() || r.u_frugal == r.frugal));
        CHECK((r.u_p_minimal.empty() || r.u_p_minimal == r.p_minimal));
    }
}

TEST_CASE("razor sets on the cancelled square")
{
    const UnitModel& m = catalog_model("cancel_square4");
    RazorSets r = razor_sets(m.oracle(), 4);

    CHECK(r.u_p_minimal == r.faithful);
    CHECK(subset(r.faithful, r.u_frugal));
    CHECK(subset(r.u_frugal, r.frugal));
    CHECK(subset(r.frugal, r.p_minimal));
    CHECK(subset(r.p_minimal, r.sgs));
    CHECK(subset(r.sgs, r.cmc));

    // The cancellation breaks faithfulness but leaves the truth u-frugal.
    CHECK(r.faithful.empty());
    CHECK_FALSE(r.u_frugal.empty());
    CHECK(std::binary_search(r.u_frugal.begin(), r.u_frugal.end(), fingerprint(m.truth)));
}

TEST_CASE("razor computation guards its input size")
{
    auto oracle = IndependenceOracle::from_dag(Dag(6, {}));
    CHECK_THROWS_AS(razor_sets(oracle, 6), TooLarge);
}
