#pragma once

// Independent reference implementations used by the unit and acceptance tests.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "coreval/graph.hpp"

namespace oracle {

using Rational = boost::rational<std::int64_t>;
using Edges = std::vector<std::pair<coreval::NodeId, coreval::NodeId>>;

inline std::filesystem::path source_dir()
{
    if (const char* env = std::getenv("COREVAL_SOURCE_DIR")) return env;
    return std::filesystem::path(__FILE__).parent_path().parent_path();
}

inline coreval::Adjacency adjacency(std::size_t n, const Edges& edges)
{
    coreval::Adjacency adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

/// G(n, p) with distinct undirected edges and no loops.
inline Edges random_edges(std::size_t n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution keep(p);
    Edges e;
    for (coreval::NodeId a = 0; a < n; ++a)
        for (coreval::NodeId b = a + 1; b < n; ++b)
            if (keep(rng)) e.emplace_back(a, b);
    return e;
}

namespace detail {

inline void walk(const coreval::Adjacency& adj, const std::vector<int>& dist_from_t, coreval::NodeId v,
                 coreval::NodeId t, std::vector<coreval::NodeId>& path, std::vector<std::vector<coreval::NodeId>>& out)
{
    path.push_back(v);
    if (v == t) {
        out.push_back(path);
    } else {
        for (auto w : adj[v])
            if (dist_from_t[w] == dist_from_t[v] - 1) walk(adj, dist_from_t, w, t, path, out);
    }
    path.pop_back();
}

} // namespace detail

/// Betweenness by listing every shortest path of every unordered pair.
inline std::vector<Rational> betweenness_by_enumeration(const coreval::Adjacency& adj)
{
    const std::size_t n = adj.size();
    std::vector<Rational> b(n, Rational(0));
    for (coreval::NodeId t = 0; t < n; ++t) {
        std::vector<int> dist(n, -1);
        std::vector<coreval::NodeId> queue{t};
        dist[t] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (auto w : adj[queue[h]])
                if (dist[w] < 0) {
                    dist[w] = dist[queue[h]] + 1;
                    queue.push_back(w);
                }
        for (coreval::NodeId s = 0; s < t; ++s) {
            if (dist[s] < 0) continue;
            std::vector<std::vector<coreval::NodeId>> paths;
            std::vector<coreval::NodeId> path;
            detail::walk(adj, dist, s, t, path, paths);
            std::vector<std::int64_t> through(n, 0);
            for (const auto& p : paths)
                for (std::size_t i = 1; i + 1 < p.size(); ++i) ++through[p[i]];
            for (std::size_t v = 0; v < n; ++v)
                if (through[v] != 0) b[v] += Rational(through[v], std::int64_t(paths.size()));
        }
    }
    return b;
}

/// Freeman centralization straight from the definition: sum of gaps to the
/// maximum over the sum attained by a star of the same order.
inline Rational freeman_degree(const coreval::Adjacency& adj)
{
    const std::int64_t n = std::int64_t(adj.size());
    if (n < 3) return Rational(0);
    std::int64_t dmax = 0;
    for (const auto& a : adj) dmax = std::max<std::int64_t>(dmax, std::int64_t(a.size()));
    std::int64_t gap = 0;
    for (const auto& a : adj) gap += dmax - std::int64_t(a.size());
    return Rational(gap, (n - 1) * (n - 2));
}

inline Rational freeman_betweenness(const coreval::Adjacency& adj)
{
    const std::int64_t n = std::int64_t(adj.size());
    if (n < 3) return Rational(0);
    const auto b = betweenness_by_enumeration(adj);
    Rational bmax(0);
    for (const auto& x : b) bmax = std::max(bmax, x);
    Rational gap(0);
    for (const auto& x : b) gap += bmax - x;
    // Star: centre carries (n-1)(n-2)/2, the n-1 leaves carry nothing.
    return gap / Rational((n - 1) * (n - 1) * (n - 2), 2);
}

inline Edges star(std::size_t n)
{
    Edges e;
    for (coreval::NodeId v = 1; v < n; ++v) e.emplace_back(0, v);
    return e;
}

inline Edges cycle(std::size_t n)
{
    Edges e;
    for (coreval::NodeId v = 0; v < n; ++v) e.emplace_back(v, coreval::NodeId((v + 1) % n));
    return e;
}

inline Edges complete(std::size_t n)
{
    Edges e;
    for (coreval::NodeId a = 0; a < n; ++a)
        for (coreval::NodeId b = a + 1; b < n; ++b) e.emplace_back(a, b);
    return e;
}

inline Edges hypercube(unsigned dim)
{
    Edges e;
    for (coreval::NodeId v = 0; v < (1u << dim); ++v)
        for (unsigned k = 0; k < dim; ++k)
            if (!(v & (1u << k))) e.emplace_back(v, v | (1u << k));
    return e;
}

inline Edges petersen()
{
    Edges e;
    for (coreval::NodeId i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return e;
}

/// Circulant graph C_n(jumps).
inline Edges circulant(std::size_t n, std::vector<std::size_t> jumps)
{
    Edges e;
    for (coreval::NodeId v = 0; v < n; ++v)
        for (auto j : jumps) {
            const auto w = coreval::NodeId((v + j) % n);
            if (2 * j == n && w < v) continue;
            e.emplace_back(v, w);
        }
    return e;
}

} // namespace oracle
