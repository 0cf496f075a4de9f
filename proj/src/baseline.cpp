#include "subclique/baseline.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "subclique/rng.hpp"

namespace subclique {

namespace {

struct Enumerator {
    const Graph& g;
    uint32_t k;
    const std::function<void(std::span<const VertexId>)>& cb;
    uint64_t budget;
    uint64_t nodes = 0;
    std::vector<VertexId> stack = {};
    // out-neighbor lists under the degree order, id-sorted
    std::vector<std::vector<VertexId>> out = {};

    void run() {
        out.resize(g.n());
        for (VertexId v = 0; v < g.n(); ++v) {
            for (VertexId w : g.neighbors_of(v)) {
                if (precedes(g, v, w)) out[v].push_back(w);
            }
        }
        stack.reserve(k);
        for (VertexId v = 0; v < g.n(); ++v) {
            stack.push_back(v);
            extend(out[v]);
            stack.pop_back();
        }
    }

    void extend(const std::vector<VertexId>& cand) {
        if (++nodes > budget)
            throw EnumerationBudgetExceeded("clique enumeration budget exceeded");
        if (stack.size() == k - 1) {
            for (VertexId v : cand) {
                stack.push_back(v);
                cb(stack);
                stack.pop_back();
            }
            return;
        }
        for (VertexId v : cand) {
            std::vector<VertexId> next;
            next.reserve(std::min(cand.size(), out[v].size()));
            std::set_intersection(cand.begin(), cand.end(), out[v].begin(),
                                  out[v].end(), std::back_inserter(next));
            if (next.size() + stack.size() + 1 < k) continue;
            stack.push_back(v);
            extend(next);
            stack.pop_back();
        }
    }
};

}  // namespace

void enumerate_cliques(const Graph& g, uint32_t k,
                       const std::function<void(std::span<const VertexId>)>& cb,
                       uint64_t node_budget) {
    if (k < 2) throw std::invalid_argument("enumerate_cliques: k must be >= 2");
    Enumerator e{.g = g, .k = k, .cb = cb, .budget = node_budget};
    e.run();
}

CliqueCensus count_cliques_exact(const Graph& g, uint32_t k,
                                 uint64_t node_budget) {
    CliqueCensus census;
    census.k = k;
    census.per_vertex.assign(g.n(), 0);
    enumerate_cliques(
        g, k,
        [&](std::span<const VertexId> clique) {
            ++census.total;
            for (VertexId v : clique) ++census.per_vertex[v];
        },
        node_budget);
    return census;
}

uint64_t count_cliques_naive(const Graph& g, uint32_t k) {
    if (g.n() > 30)
        throw std::invalid_argument("count_cliques_naive: n must be <= 30");
    if (k < 2) throw std::invalid_argument("count_cliques_naive: k must be >= 2");
    if (k > g.n()) return 0;

    // adjacency bitmask per vertex
    std::vector<uint32_t> adj(g.n(), 0);
    for (VertexId v = 0; v < g.n(); ++v)
        for (VertexId w : g.neighbors_of(v)) adj[v] |= 1u << w;

    uint64_t count = 0;
    std::vector<uint32_t> pick(k);
    // iterate all k-subsets in lexicographic order
    for (uint32_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        bool clique = true;
        for (uint32_t i = 0; i < k && clique; ++i)
            for (uint32_t j = i + 1; j < k; ++j)
                if (!(adj[pick[i]] >> pick[j] & 1u)) {
                    clique = false;
                    break;
                }
        if (clique) ++count;

        int32_t pos = static_cast<int32_t>(k) - 1;
        while (pos >= 0 && pick[pos] == g.n() - k + pos) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (uint32_t i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
    }
    return count;
}

Graph gen_path_plus_clique(uint32_t n, uint32_t t) {
    if (t > n) throw std::invalid_argument("gen_path_plus_clique: t > n");
    std::vector<std::pair<VertexId, VertexId>> edges;
    const uint32_t path_n = n - t;
    for (uint32_t i = 0; i + 1 < path_n; ++i) edges.emplace_back(i, i + 1);
    for (uint32_t i = 0; i < t; ++i)
        for (uint32_t j = i + 1; j < t; ++j)
            edges.emplace_back(path_n + i, path_n + j);
    return Graph::from_edges(n, edges);
}

Graph gen_gnm(uint32_t n, uint64_t m_edges, uint64_t seed) {
    const uint64_t max_edges =
        static_cast<uint64_t>(n) * (n - 1) / 2;
    if (m_edges > max_edges)
        throw std::invalid_argument("gen_gnm: more edges than vertex pairs");

    Rng rng(seed);
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(m_edges);

    if (m_edges * 2 > max_edges) {
        // dense: partial Fisher-Yates over all pairs
        std::vector<std::pair<VertexId, VertexId>> all;
        all.reserve(max_edges);
        for (uint32_t u = 0; u < n; ++u)
            for (uint32_t v = u + 1; v < n; ++v) all.emplace_back(u, v);
        for (uint64_t i = 0; i < m_edges; ++i) {
            const uint64_t j = i + rng.uniform_index(all.size() - i);
            std::swap(all[i], all[j]);
        }
        edges.assign(all.begin(), all.begin() + static_cast<int64_t>(m_edges));
    } else {
        // sparse: rejection-sample distinct pairs
        std::unordered_set<uint64_t> chosen;
        chosen.reserve(m_edges * 2);
        while (edges.size() < m_edges) {
            const auto u = static_cast<VertexId>(rng.uniform_index(n));
            const auto v = static_cast<VertexId>(rng.uniform_index(n));
            if (u == v) continue;
            const uint64_t key =
                (static_cast<uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
            if (!chosen.insert(key).second) continue;
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    return Graph::from_edges(n, edges);
}

AssignmentCensus unassigned_clique_mass(const Graph& g,
                                        std::span<const Verdict> verdicts,
                                        uint32_t k) {
    if (verdicts.size() != g.n())
        throw std::invalid_argument("unassigned_clique_mass: verdict size mismatch");
    AssignmentCensus census;
    census.alpha.assign(g.n(), 0);
    enumerate_cliques(g, k, [&](std::span<const VertexId> clique) {
        ++census.total;
        bool found = false;
        VertexId first = 0;
        for (VertexId v : clique) {
            if (verdicts[v] != Verdict::unpopular) continue;
            if (!found || precedes(g, v, first)) first = v;
            found = true;
        }
        if (found)
            ++census.alpha[first];
        else
            ++census.unassigned;
    });
    return census;
}

}  // namespace subclique
