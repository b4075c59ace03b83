#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coreval/corpus.hpp"
#include "coreval/timeutil.hpp"

namespace coreval {

using NodeId = std::uint32_t;
using Adjacency = std::vector<std::vector<NodeId>>;

enum class ArcKind : std::uint8_t { Mention, Reply, Retweet };

std::string_view to_string(ArcKind kind);

/// One directed interaction event.
struct Arc {
    NodeId source;
    NodeId target;
    Timestamp time;
    ArcKind kind;
    std::uint32_t message; // ordinal of the originating message in build order
};

/// Actors and their interactions for one slice of the corpus.
///
/// Nodes are sorted by handle. The arc list keeps direction, multiplicity and
/// self-arcs; the simple projection (undirected, distinct pairs, no self-pairs)
/// backs every connectivity measure.
class InteractionGraph {
public:
    InteractionGraph() = default;

    /// Unlabelled graph on `n` nodes named "v0".."v{n-1}" (zero-padded so the
    /// name order matches the index order). Arcs are mentions at t=0.
    static InteractionGraph from_edges(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges);

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t simple_edge_count() const { return simple_edges_; }
    std::size_t dangling_references() const { return dangling_; }
    std::size_t message_count() const { return messages_; }

    std::span<const std::string> nodes() const { return nodes_; }
    std::span<const Arc> arcs() const { return arcs_; }
    const Adjacency& adjacency() const { return adjacency_; }
    std::size_t degree(NodeId v) const { return adjacency_[v].size(); }
    std::optional<NodeId> find(std::string_view handle) const;

private:
    friend class GraphBuilder;

    std::vector<std::string> nodes_;
    std::vector<Arc> arcs_;
    Adjacency adjacency_;
    std::size_t simple_edges_ = 0;
    std::size_t dangling_ = 0;
    std::size_t messages_ = 0;
};

/// Accumulates messages (in canonical order) into an InteractionGraph.
class GraphBuilder {
public:
    explicit GraphBuilder(const AuthorIndex& authors) : authors_(&authors) {}

    void add(const Message& m);
    InteractionGraph finish() &&;

private:
    struct PendingArc {
        std::string source;
        std::string target;
        Timestamp time;
        ArcKind kind;
        std::uint32_t message;
    };

    const AuthorIndex* authors_;
    std::vector<std::string> handles_;
    std::vector<PendingArc> pending_;
    std::size_t dangling_ = 0;
    std::uint32_t messages_ = 0;
};

InteractionGraph build_graph(std::span<const Message> messages, const AuthorIndex& authors);
InteractionGraph build_graph(std::span<const TaggedMessage> messages, const AuthorIndex& authors);

/// Brandes betweenness on an unweighted undirected adjacency list.
///
/// Each unordered pair {s,t} with σ_st shortest paths adds σ_st(v)/σ_st to every
/// interior v; unreachable pairs add nothing. `Scalar` only needs +, *, / and
/// construction from an integer, so an exact rational type can be plugged in.
template <typename Scalar>
std::vector<Scalar> brandes_betweenness(const Adjacency& adj, std::size_t first_source = 0,
                                        std::size_t last_source = static_cast<std::size_t>(-1))
{
    const std::size_t n = adj.size();
    last_source = std::min(last_source, n);
    std::vector<Scalar> centrality(n, Scalar(0));
    std::vector<Scalar> sigma(n, Scalar(0));
    std::vector<Scalar> delta(n, Scalar(0));
    std::vector<std::int64_t> dist(n, -1);
    std::vector<NodeId> order;
    order.reserve(n);
    std::vector<NodeId> queue;
    queue.reserve(n);

    for (std::size_t s = first_source; s < last_source; ++s) {
        if (adj[s].empty()) continue;
        order.clear();
        queue.clear();
        sigma[s] = Scalar(1);
        dist[s] = 0;
        queue.push_back(NodeId(s));
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const NodeId v = queue[head];
            order.push_back(v);
            for (const NodeId w : adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if (dist[w] == dist[v] + 1) sigma[w] = sigma[w] + sigma[v];
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const NodeId w = *it;
            for (const NodeId v : adj[w]) {
                if (dist[v] == dist[w] - 1) delta[v] = delta[v] + sigma[v] / sigma[w] * (Scalar(1) + delta[w]);
            }
            if (w != s) centrality[w] = centrality[w] + delta[w];
        }
        for (const NodeId v : order) {
            sigma[v] = Scalar(0);
            delta[v] = Scalar(0);
            dist[v] = -1;
        }
    }
    // Every unordered pair was visited from both ends.
    for (auto& c : centrality) c = c / Scalar(2);
    return centrality;
}

/// Unnormalized betweenness per node (index order of `g.nodes()`).
/// Sources are split into a fixed set of chunks whose partial sums are added in
/// chunk order, so the result is identical for any thread count.
std::vector<double> betweenness(const InteractionGraph& g, unsigned threads = 1);

std::map<std::string, double> betweenness_by_actor(const InteractionGraph& g, unsigned threads = 1);

/// 2|E| / (n(n-1)); 0 when n < 2.
double density(const InteractionGraph& g);

/// Freeman degree centralization; 0 when n < 3.
double group_degree_centralization(const InteractionGraph& g);

/// Freeman betweenness centralization over precomputed betweenness; 0 when n < 3.
double group_betweenness_centralization(std::span<const double> betweenness);
double group_betweenness_centralization(const InteractionGraph& g, unsigned threads = 1);

/// Betweenness divided by the star maximum (n-1)(n-2)/2.
std::vector<double> normalized_betweenness(std::span<const double> betweenness);

struct ConnectivityScores {
    double density = 0.0;
    double group_degree_centralization = 0.0;
    double group_betweenness_centralization = 0.0;
    std::size_t node_count = 0;
    std::size_t simple_edge_count = 0;
};

ConnectivityScores connectivity(const InteractionGraph& g, unsigned threads = 1);

} // namespace coreval
