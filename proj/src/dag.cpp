#include "grasp/dag.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>
#include <string>

#include "grasp/errors.hpp"

namespace grasp {

namespace {

std::string cycle_witness(int m, const std::vector<std::vector<int>>& children)
{
    // Find any vertex on a cycle by DFS, then walk the cycle for the message.
    std::vector<int> state(m, 0); // 0 new, 1 open, 2 done
    std::vector<int> stack, path;
    std::vector<int> pos_in_path(m, -1);
    std::function<std::string(int)> visit = [&](int v) -> std::string {
        state[v] = 1;
        pos_in_path[v] = static_cast<int>(path.size());
        path.push_back(v);
        for (int w : children[v]) {
            if (state[w] == 1) {
                std::ostringstream out;
                for (std::size_t i = pos_in_path[w]; i < path.size(); ++i)
                    out << path[i] << " -> ";
                out << w;
                return out.str();
            }
            if (state[w] == 0) {
                std::string found = visit(w);
                if (!found.empty())
                    return found;
            }
        }
        state[v] = 2;
        pos_in_path[v] = -1;
        path.pop_back();
        return {};
    };
    for (int v = 0; v < m; ++v) {
        if (state[v] == 0) {
            std::string found = visit(v);
            if (!found.empty())
                return found;
        }
    }
    return "unknown";
}

} // namespace

Dag::Dag(int vertex_count, std::vector<Edge> edges)
    : m_(vertex_count)
{
    if (m_ <= 0)
        throw VertexOutOfRange("vertex count must be positive, got " + std::to_string(m_));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    parents_.resize(m_);
    children_.resize(m_);
    parent_mask_.assign(m_, VertexMask(m_));
    for (const auto& [j, k] : edges) {
        if (j < 0 || j >= m_ || k < 0 || k >= m_)
            throw VertexOutOfRange("edge (" + std::to_string(j) + ", " + std::to_string(k) +
                                   ") out of range for m=" + std::to_string(m_));
        if (j == k)
            throw SelfLoop("self-loop at vertex " + std::to_string(j));
        parents_[k].push_back(j);
        children_[j].push_back(k);
        parent_mask_[k].set(j);
    }
    edges_ = std::move(edges);

    // Kahn peel; leftovers mean a cycle.
    std::vector<int> indegree(m_);
    for (int v = 0; v < m_; ++v)
        indegree[v] = static_cast<int>(parents_[v].size());
    std::queue<int> ready;
    for (int v = 0; v < m_; ++v)
        if (indegree[v] == 0)
            ready.push(v);
    int peeled = 0;
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop();
        ++peeled;
        for (int w : children_[v])
            if (--indegree[w] == 0)
                ready.push(w);
    }
    if (peeled != m_)
        throw CycleDetected("cycle: " + cycle_witness(m_, children_));
}

bool Dag::has_edge(int j, int k) const
{
    check_vertex(j);
    check_vertex(k);
    return parent_mask_[k].test(j);
}

const std::vector<int>& Dag::parents(int v) const
{
    check_vertex(v);
    return parents_[v];
}

const std::vector<int>& Dag::children(int v) const
{
    check_vertex(v);
    return children_[v];
}

const VertexMask& Dag::parent_mask(int v) const
{
    check_vertex(v);
    return parent_mask_[v];
}

VertexMask Dag::ancestor_mask(int v) const
{
    check_vertex(v);
    VertexMask anc(m_);
    std::vector<int> stack(parents_[v].begin(), parents_[v].end());
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        if (anc.test(a))
            continue;
        anc.set(a);
        stack.insert(stack.end(), parents_[a].begin(), parents_[a].end());
    }
    return anc;
}

VertexMask Dag::descendant_mask(int v) const
{
    check_vertex(v);
    VertexMask des(m_);
    std::vector<int> stack(children_[v].begin(), children_[v].end());
    while (!stack.empty()) {
        int d = stack.back();
        stack.pop_back();
        if (des.test(d))
            continue;
        des.set(d);
        stack.insert(stack.end(), children_[d].begin(), children_[d].end());
    }
    return des;
}

std::vector<int> Dag::non_descendants(int v) const
{
    VertexMask des = descendant_mask(v);
    std::vector<int> out;
    for (int w = 0; w < m_; ++w)
        if (w != v && !des.test(w))
            out.push_back(w);
    return out;
}

std::vector<int> Dag::topological_order() const
{
    std::vector<int> indegree(m_);
    for (int v = 0; v < m_; ++v)
        indegree[v] = static_cast<int>(parents_[v].size());
    // Min-queue keeps the order deterministic.
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < m_; ++v)
        if (indegree[v] == 0)
            ready.push(v);
    std::vector<int> order;
    order.reserve(m_);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : children_[v])
            if (--indegree[w] == 0)
                ready.push(w);
    }
    return order;
}

void Dag::check_vertex(int v) const
{
    if (v < 0 || v >= m_)
        throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range for m=" +
                               std::to_string(m_));
}

Cpdag::Cpdag(int vertex_count, std::vector<Edge> directed,
             std::vector<std::pair<int, int>> undirected)
    : m_(vertex_count)
{
    auto check = [this](int v) {
        if (v < 0 || v >= m_)
            throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range for m=" +
                                   std::to_string(m_));
    };
    for (auto& [a, b] : undirected) {
        check(a);
        check(b);
        if (a == b)
            throw SelfLoop("self-loop at vertex " + std::to_string(a));
        if (a > b)
            std::swap(a, b);
    }
    std::set<std::pair<int, int>> pairs;
    for (const auto& [j, k] : directed) {
        check(j);
        check(k);
        if (j == k)
            throw SelfLoop("self-loop at vertex " + std::to_string(j));
        pairs.emplace(std::min(j, k), std::max(j, k));
    }
    for (const auto& p : undirected)
        if (pairs.count(p))
            throw InvalidQuery("pair (" + std::to_string(p.first) + ", " +
                               std::to_string(p.second) + ") both directed and undirected");
    std::sort(directed.begin(), directed.end());
    directed.erase(std::unique(directed.begin(), directed.end()), directed.end());
    std::sort(undirected.begin(), undirected.end());
    undirected.erase(std::unique(undirected.begin(), undirected.end()), undirected.end());
    directed_ = std::move(directed);
    undirected_ = std::move(undirected);
}

bool DagFingerprint::operator<(const DagFingerprint& other) const
{
    if (m != other.m)
        return m < other.m;
    return codes < other.codes;
}

std::size_t DagFingerprintHash::operator()(const DagFingerprint& fp) const
{
    // FNV-1a over the code words.
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(fp.m));
    for (std::uint32_t c : fp.codes)
        mix(c);
    return h;
}

DagFingerprint fingerprint(const Dag& g)
{
    DagFingerprint fp;
    fp.m = g.vertex_count();
    fp.codes.reserve(g.edges().size());
    for (const auto& [j, k] : g.edges())
        fp.codes.push_back(static_cast<std::uint32_t>(j) * g.vertex_count() + k);
    return fp;
}

bool d_separated(const Dag& g, int i, int j, const std::vector<int>& z)
{
    VertexMask mask(g.vertex_count());
    for (int v : z) {
        if (v < 0 || v >= g.vertex_count())
            throw VertexOutOfRange("conditioning vertex " + std::to_string(v) +
                                   " out of range for m=" + std::to_string(g.vertex_count()));
        mask.set(v);
    }
    return d_separated(g, i, j, mask);
}

bool d_separated(const Dag& g, int i, int j, const VertexMask& z)
{
    const int m = g.vertex_count();
    if (i < 0 || i >= m || j < 0 || j >= m)
        throw VertexOutOfRange("query vertex out of range");
    if (i == j || z.test(i) || z.test(j))
        throw InvalidQuery("d-separation query requires i != j and i, j not in z");

    // Ball passing over (vertex, arrival direction) states. An arrival from a
    // child at an unconditioned vertex continues to parents and children; an
    // arrival from a parent continues to children when unconditioned and
    // bounces to parents when conditioned (active collider). Conditioned
    // descendants activate colliders through the bounce.
    std::vector<char> seen_up(m, 0), seen_down(m, 0); // up: arrived from child
    std::vector<std::pair<int, bool>> stack;          // (vertex, from_child)
    stack.emplace_back(i, true);
    seen_up[i] = 1;
    while (!stack.empty()) {
        auto [v, from_child] = stack.back();
        stack.pop_back();
        if (v == j)
            return false;
        if (from_child) {
            if (z.test(v))
                continue;
            for (int p : g.parents(v))
                if (!seen_up[p]) {
                    seen_up[p] = 1;
                    stack.emplace_back(p, true);
                }
            for (int c : g.children(v))
                if (!seen_down[c]) {
                    seen_down[c] = 1;
                    stack.emplace_back(c, false);
                }
        } else if (z.test(v)) {
            for (int p : g.parents(v))
                if (!seen_up[p]) {
                    seen_up[p] = 1;
                    stack.emplace_back(p, true);
                }
        } else {
            for (int c : g.children(v))
                if (!seen_down[c]) {
                    seen_down[c] = 1;
                    stack.emplace_back(c, false);
                }
        }
    }
    return true;
}

bool is_covered(const Dag& g, int j, int k)
{
    if (!g.has_edge(j, k))
        return false;
    VertexMask pk = g.parent_mask(k);
    pk.reset(j);
    return g.parent_mask(j) == pk;
}

bool is_singular(const Dag& g, int j, int k)
{
    if (!g.has_edge(j, k))
        return false;
    // Any other unidirectional j-to-k path must leave through a different
    // child of j or re-enter k; search k's ancestors from j skipping the edge.
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack;
    for (int c : g.children(j))
        if (c != k) {
            stack.push_back(c);
            seen[c] = 1;
        }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == k)
            return false;
        for (int c : g.children(v))
            if (!seen[c]) {
                seen[c] = 1;
                stack.push_back(c);
            }
    }
    return true;
}

std::vector<Edge> covered_edges(const Dag& g)
{
    std::vector<Edge> out;
    for (const auto& [j, k] : g.edges())
        if (is_covered(g, j, k))
            out.emplace_back(j, k);
    return out;
}

std::vector<Edge> singular_edges(const Dag& g)
{
    std::vector<Edge> out;
    for (const auto& [j, k] : g.edges())
        if (is_singular(g, j, k))
            out.emplace_back(j, k);
    return out;
}

std::vector<Edge> edges_of_tier(const Dag& g, EdgeTier t)
{
    switch (t) {
    case EdgeTier::covered:
        return covered_edges(g);
    case EdgeTier::singular:
        return singular_edges(g);
    case EdgeTier::all:
        return g.edges();
    }
    throw InvalidQuery("unknown edge tier");
}

namespace {

// Orientation state while completing a pattern: 0 none, 1 j->k, 2 undirected.
struct PatternGrid {
    int m;
    std::vector<int> cell;
    int& at(int j, int k) { return cell[j * m + k]; }
    int at(int j, int k) const { return cell[j * m + k]; }
    bool adjacent(int a, int b) const { return at(a, b) != 0 || at(b, a) != 0; }
    bool directed(int a, int b) const { return at(a, b) == 1; }
    bool undirected(int a, int b) const { return at(a, b) == 2; }
    void orient(int a, int b)
    {
        at(a, b) = 1;
        at(b, a) = 0;
    }
};

// Meek rules R1-R4 applied to fixpoint. Each rule orients a-b into a->b:
//   R1: some c->a with c, b nonadjacent.
//   R2: some chain a->c->b.
//   R3: nonadjacent c, d with a-c, a-d, c->b, d->b.
//   R4: some c, d with a-c, c->d, d->b and c, b nonadjacent.
void meek_closure(PatternGrid& grid)
{
    const int m = grid.m;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < m && !changed; ++a) {
            for (int b = 0; b < m && !changed; ++b) {
                if (!grid.undirected(a, b))
                    continue;
                bool orient = false;
                for (int c = 0; c < m && !orient; ++c) {
                    if (c == a || c == b)
                        continue;
                    if (grid.directed(c, a) && !grid.adjacent(c, b))
                        orient = true; // R1
                    else if (grid.directed(a, c) && grid.directed(c, b))
                        orient = true; // R2
                }
                for (int c = 0; c < m && !orient; ++c) {
                    if (c == a || c == b || !grid.undirected(a, c) || !grid.directed(c, b))
                        continue;
                    for (int d = c + 1; d < m && !orient; ++d) {
                        if (d == a || d == b)
                            continue;
                        if (grid.undirected(a, d) && grid.directed(d, b) && !grid.adjacent(c, d))
                            orient = true; // R3
                    }
                }
                for (int c = 0; c < m && !orient; ++c) {
                    if (c == a || c == b || !grid.undirected(a, c) || grid.adjacent(c, b))
                        continue;
                    for (int d = 0; d < m && !orient; ++d) {
                        if (d == a || d == b || d == c)
                            continue;
                        if (grid.directed(c, d) && grid.directed(d, b))
                            orient = true; // R4
                    }
                }
                if (orient) {
                    grid.orient(a, b);
                    changed = true;
                }
            }
        }
    }
}

} // namespace

Cpdag to_cpdag(const Dag& g)
{
    const int m = g.vertex_count();
    PatternGrid grid{m, std::vector<int>(m * m, 0)};
    for (const auto& [j, k] : g.edges()) {
        grid.at(j, k) = 2;
        grid.at(k, j) = 2;
    }
    for (int b = 0; b < m; ++b) {
        const auto& ps = g.parents(b);
        for (std::size_t x = 0; x < ps.size(); ++x)
            for (std::size_t y = x + 1; y < ps.size(); ++y) {
                int a = ps[x], c = ps[y];
                if (!g.has_edge(a, c) && !g.has_edge(c, a)) {
                    grid.orient(a, b);
                    grid.orient(c, b);
                }
            }
    }
    meek_closure(grid);

    std::vector<Edge> directed;
    std::vector<std::pair<int, int>> undirected;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (grid.directed(a, b))
                directed.emplace_back(a, b);
            if (a < b && grid.undirected(a, b))
                undirected.emplace_back(a, b);
        }
    return Cpdag(m, std::move(directed), std::move(undirected));
}

bool markov_equivalent(const Dag& g, const Dag& h)
{
    if (g.vertex_count() != h.vertex_count())
        return false;
    auto skeleton = [](const Dag& d) {
        std::set<std::pair<int, int>> s;
        for (const auto& [j, k] : d.edges())
            s.emplace(std::min(j, k), std::max(j, k));
        return s;
    };
    if (skeleton(g) != skeleton(h))
        return false;
    auto vstructures = [](const Dag& d) {
        std::set<std::tuple<int, int, int>> vs;
        for (int b = 0; b < d.vertex_count(); ++b) {
            const auto& ps = d.parents(b);
            for (std::size_t x = 0; x < ps.size(); ++x)
                for (std::size_t y = x + 1; y < ps.size(); ++y) {
                    int a = std::min(ps[x], ps[y]), c = std::max(ps[x], ps[y]);
                    if (!d.has_edge(a, c) && !d.has_edge(c, a))
                        vs.emplace(a, c, b);
                }
        }
        return vs;
    };
    return vstructures(g) == vstructures(h);
}

std::set<CiStatement> all_dsep_statements(const Dag& g)
{
    const int m = g.vertex_count();
    if (m > 12)
        throw TooLarge("statement enumeration guarded at m <= 12, got m=" + std::to_string(m));
    std::set<CiStatement> out;
    std::vector<int> rest;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            rest.clear();
            for (int v = 0; v < m; ++v)
                if (v != i && v != j)
                    rest.push_back(v);
            const int subsets = 1 << rest.size();
            for (int bits = 0; bits < subsets; ++bits) {
                VertexMask z(m);
                std::vector<int> zs;
                for (std::size_t t = 0; t < rest.size(); ++t)
                    if (bits & (1 << t)) {
                        z.set(rest[t]);
                        zs.push_back(rest[t]);
                    }
                if (d_separated(g, i, j, z))
                    out.emplace(i, j, std::move(zs));
            }
        }
    return out;
}

} // namespace grasp
