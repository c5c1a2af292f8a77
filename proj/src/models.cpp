#include "grasp/models.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>

#include "catalog/catalog.hpp"
#include "grasp/errors.hpp"

namespace grasp {

namespace detail {

UnitModel make_unit_model(const char* name, int m, const std::vector<std::pair<int, int>>& edges,
                          const std::vector<CiSpec>& cis, int expected_sparsest_edges)
{
    std::vector<Edge> zero_based;
    zero_based.reserve(edges.size());
    for (const auto& [j, k] : edges)
        zero_based.emplace_back(j - 1, k - 1);
    std::vector<CiStatement> extra;
    extra.reserve(cis.size());
    for (const auto& spec : cis) {
        std::vector<int> z;
        z.reserve(spec.z.size());
        for (int v : spec.z)
            z.push_back(v - 1);
        extra.emplace_back(spec.i - 1, spec.j - 1, std::move(z));
    }
    return UnitModel{name, Dag(m, std::move(zero_based)), std::move(extra),
                     expected_sparsest_edges};
}

} // namespace detail

IndependenceOracle UnitModel::oracle() const
{
    return IndependenceOracle::augmented(truth, extra_ci);
}

const std::vector<UnitModel>& udag_catalog()
{
    static const std::vector<UnitModel> catalog = [] {
        std::vector<UnitModel> out;
        detail::register_udags(out);
        out.push_back(detail::make_unit_model("faithful_collider", 3, {{1, 3}, {2, 3}}, {}, 2));
        out.push_back(detail::make_unit_model("cancel_square4", 4,
                                              {{1, 2}, {2, 3}, {3, 4}, {1, 4}},
                                              {{2, 4, {}}}, 4));
        out.push_back(detail::make_unit_model(
            "cancel_dense5", 5, {{1, 3}, {1, 4}, {2, 4}, {3, 4}, {1, 5}, {3, 5}, {4, 5}},
            {{1, 5, {}}}, 7));
        return out;
    }();
    return catalog;
}

namespace {

std::vector<std::vector<int>> all_orders(int m)
{
    std::vector<int> order(m);
    for (int v = 0; v < m; ++v)
        order[v] = v;
    std::vector<std::vector<int>> out;
    do
        out.push_back(order);
    while (std::next_permutation(order.begin(), order.end()));
    return out;
}

} // namespace

RecoveryResult recovery_test(const UnitModel& model, int tier, const SearchConfig& cfg, int jobs)
{
    const int m = model.truth.vertex_count();
    if (m > 7)
        throw TooLarge("all-permutations experiment guarded at m <= 7, got " + std::to_string(m));
    SearchConfig run_cfg = cfg;
    run_cfg.tier = tier;
    run_cfg.validate();

    const IndependenceOracle oracle = model.oracle();
    const std::vector<std::vector<int>> orders = all_orders(m);
    const int total = static_cast<int>(orders.size());
    std::vector<char> ok(total, 0);

    auto run_one = [&](int t) {
        Scorer scorer = Scorer::oracle(oracle);
        Permutation out = grasp(scorer, Permutation(orders[t]), run_cfg);
        ok[t] = markov_equivalent(scorer.evaluate(out).first, model.truth) ? 1 : 0;
    };

    if (jobs <= 1) {
        for (int t = 0; t < total; ++t)
            run_one(t);
    } else {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (int t = 0; t < total; ++t)
            run_one(t);
    }

    RecoveryResult result;
    for (int t = 0; t < total; ++t)
        if (!ok[t]) {
            result.recovered = false;
            result.failures.emplace_back(orders[t]);
        }
    return result;
}

namespace {

// Up to 128 statement slots; m <= 5 needs C(5,2) * 2^3 = 80.
struct Mask128 {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    void set(int bit)
    {
        if (bit < 64)
            lo |= 1ull << bit;
        else
            hi |= 1ull << (bit - 64);
    }
    bool subset_of(const Mask128& o) const
    {
        return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0;
    }
    bool strict_subset_of(const Mask128& o) const { return subset_of(o) && !(*this == o); }
    auto operator<=>(const Mask128&) const = default;
};

struct StatementUniverse {
    struct Statement {
        int i;
        int j;
        VertexMask zmask;
        std::vector<int> z;
    };
    std::vector<Statement> statements;

    explicit StatementUniverse(int m)
    {
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                std::vector<int> others;
                for (int v = 0; v < m; ++v)
                    if (v != i && v != j)
                        others.push_back(v);
                const int subsets = 1 << others.size();
                for (int mask = 0; mask < subsets; ++mask) {
                    Statement s{i, j, VertexMask(m), {}};
                    for (std::size_t t = 0; t < others.size(); ++t)
                        if (mask & (1 << t)) {
                            s.zmask.set(others[t]);
                            s.z.push_back(others[t]);
                        }
                    statements.push_back(std::move(s));
                }
            }
    }

    Mask128 of_dag(const Dag& g) const
    {
        Mask128 out;
        for (std::size_t t = 0; t < statements.size(); ++t)
            if (d_separated(g, statements[t].i, statements[t].j, statements[t].zmask))
                out.set(static_cast<int>(t));
        return out;
    }

    Mask128 of_oracle(const IndependenceOracle& o) const
    {
        Mask128 out;
        for (std::size_t t = 0; t < statements.size(); ++t)
            if (o.ci(statements[t].i, statements[t].j, statements[t].z))
                out.set(static_cast<int>(t));
        return out;
    }
};

// Ordered vertex pairs (j, k), j != k, packed into m*(m-1) bits.
int pair_bit(int j, int k, int m)
{
    return j * (m - 1) + (k < j ? k : k - 1);
}

Edge bit_pair(int bit, int m)
{
    const int j = bit / (m - 1);
    const int r = bit % (m - 1);
    return {j, r < j ? r : r + 1};
}

bool acyclic(std::uint32_t mask, int m)
{
    int indeg[8] = {};
    std::uint32_t remaining = mask;
    for (std::uint32_t bits = mask; bits; bits &= bits - 1)
        ++indeg[bit_pair(std::countr_zero(bits), m).second];
    int removed = 0;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int v = 0; v < m; ++v) {
            if (indeg[v] != 0)
                continue;
            indeg[v] = -1;
            ++removed;
            progress = true;
            for (std::uint32_t bits = remaining; bits; bits &= bits - 1) {
                const int bit = std::countr_zero(bits);
                const auto [j, k] = bit_pair(bit, m);
                if (j == v) {
                    --indeg[k];
                    remaining &= ~(1u << bit);
                }
            }
        }
    }
    return removed == m;
}

Dag dag_of_mask(std::uint32_t mask, int m)
{
    std::vector<Edge> edges;
    for (std::uint32_t bits = mask; bits; bits &= bits - 1)
        edges.push_back(bit_pair(std::countr_zero(bits), m));
    return Dag(m, std::move(edges));
}

struct DagEntry {
    std::uint32_t mask;
    Mask128 stm;
    int edge_count;
};

std::vector<DagFingerprint> fingerprints_of(const std::vector<const DagEntry*>& entries, int m)
{
    std::vector<DagFingerprint> out;
    out.reserve(entries.size());
    for (const DagEntry* e : entries)
        out.push_back(fingerprint(dag_of_mask(e->mask, m)));
    std::sort(out.begin(), out.end());
    return out;
}

// The u_ variants demand a single Markov equivalence class, i.e. one shared
// statement set.
bool one_class(const std::vector<const DagEntry*>& entries)
{
    for (const DagEntry* e : entries)
        if (!(e->stm == entries.front()->stm))
            return false;
    return !entries.empty();
}

} // namespace

RazorSets razor_sets(const IndependenceOracle& o, int m, int jobs)
{
    if (m > 5)
        throw TooLarge("DAG enumeration guarded at m <= 5, got " + std::to_string(m));
    if (o.vertex_count() != m)
        throw DimensionMismatch("oracle spans " + std::to_string(o.vertex_count()) +
                                " vertices, requested m=" + std::to_string(m));

    const StatementUniverse universe(m);
    const Mask128 oracle_stm = universe.of_oracle(o);
    const int bits = m * (m - 1);
    const std::uint32_t masks = 1u << bits;

    // 0 = cyclic, 1 = Markovian, 2 = acyclic but not Markovian.
    std::vector<std::uint8_t> flag(masks, 0);
    const int chunks = jobs <= 1 ? 1 : jobs;
    std::vector<std::vector<DagEntry>> chunk_entries(chunks);

    auto run_chunk = [&](int c) {
        const std::uint64_t lo = static_cast<std::uint64_t>(masks) * c / chunks;
        const std::uint64_t hi = static_cast<std::uint64_t>(masks) * (c + 1) / chunks;
        auto& local = chunk_entries[c];
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            const auto m32 = static_cast<std::uint32_t>(mask);
            if (!acyclic(m32, m))
                continue;
            const Dag g = dag_of_mask(m32, m);
            const Mask128 stm = universe.of_dag(g);
            const bool markov = stm.subset_of(oracle_stm);
            flag[m32] = markov ? 1 : 2;
            if (markov)
                local.push_back(DagEntry{m32, stm, g.edge_count()});
        }
    };

    if (chunks == 1) {
        run_chunk(0);
    } else {
#pragma omp parallel for schedule(static, 1) num_threads(jobs)
        for (int c = 0; c < chunks; ++c)
            run_chunk(c);
    }

    std::vector<DagEntry> markovian;
    for (const auto& local : chunk_entries)
        markovian.insert(markovian.end(), local.begin(), local.end());

    std::vector<Mask128> distinct_stm;
    distinct_stm.reserve(markovian.size());
    for (const auto& e : markovian)
        distinct_stm.push_back(e.stm);
    std::sort(distinct_stm.begin(), distinct_stm.end());
    distinct_stm.erase(std::unique(distinct_stm.begin(), distinct_stm.end()), distinct_stm.end());

    int min_edges = bits;
    for (const auto& e : markovian)
        min_edges = std::min(min_edges, e.edge_count);

    std::vector<const DagEntry*> cmc, sgs, frugal, p_minimal, faithful;
    for (const auto& e : markovian) {
        cmc.push_back(&e);
        if (e.stm == oracle_stm)
            faithful.push_back(&e);
        if (e.edge_count == min_edges)
            frugal.push_back(&e);

        bool deletion_markovian = false;
        for (std::uint32_t bitset = e.mask; bitset; bitset &= bitset - 1) {
            const std::uint32_t sub = e.mask & ~(bitset & -bitset);
            if (flag[sub] == 1) {
                deletion_markovian = true;
                break;
            }
        }
        if (!deletion_markovian)
            sgs.push_back(&e);

        bool dominated = false;
        for (const auto& t : distinct_stm)
            if (e.stm.strict_subset_of(t)) {
                dominated = true;
                break;
            }
        if (!dominated)
            p_minimal.push_back(&e);
    }

    RazorSets out;
    out.cmc = fingerprints_of(cmc, m);
    out.sgs = fingerprints_of(sgs, m);
    out.frugal = fingerprints_of(frugal, m);
    out.p_minimal = fingerprints_of(p_minimal, m);
    out.faithful = fingerprints_of(faithful, m);
    if (one_class(frugal))
        out.u_frugal = out.frugal;
    if (one_class(p_minimal))
        out.u_p_minimal = out.p_minimal;
    return out;
}

std::vector<Dag> sp_exhaustive(const IndependenceOracle& o, int m)
{
    if (m > 7)
        throw TooLarge("all-permutations induction guarded at m <= 7, got " + std::to_string(m));
    if (o.vertex_count() != m)
        throw DimensionMismatch("oracle spans " + std::to_string(o.vertex_count()) +
                                " vertices, requested m=" + std::to_string(m));

    Scorer scorer = Scorer::oracle(o);
    std::map<DagFingerprint, Dag> best;
    int best_edges = m * m;
    for (const auto& order : all_orders(m)) {
        Dag g = scorer.evaluate(Permutation(order)).first;
        if (g.edge_count() > best_edges)
            continue;
        if (g.edge_count() < best_edges) {
            best_edges = g.edge_count();
            best.clear();
        }
        best.emplace(fingerprint(g), std::move(g));
    }
    std::vector<Dag> out;
    out.reserve(best.size());
    for (auto& [fp, g] : best)
        out.push_back(std::move(g));
    return out;
}

} // namespace grasp
