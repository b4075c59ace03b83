#include "coreval/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <thread>

namespace coreval {
namespace {

constexpr std::size_t kBetweennessChunks = 64;

void finalize_simple_projection(std::vector<std::pair<NodeId, NodeId>>& pairs, Adjacency& adjacency,
                                std::size_t& edge_count)
{
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    edge_count = pairs.size();
    for (const auto& [a, b] : pairs) {
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
    }
    for (auto& list : adjacency) std::sort(list.begin(), list.end());
}

} // namespace

std::string_view to_string(ArcKind kind)
{
    switch (kind) {
    case ArcKind::Mention: return "mention";
    case ArcKind::Reply: return "reply";
    case ArcKind::Retweet: return "retweet";
    }
    return "?";
}

std::optional<NodeId> InteractionGraph::find(std::string_view handle) const
{
    const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), handle);
    if (it == nodes_.end() || *it != handle) return std::nullopt;
    return NodeId(it - nodes_.begin());
}

InteractionGraph InteractionGraph::from_edges(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges)
{
    InteractionGraph g;
    const int width = static_cast<int>(std::to_string(n == 0 ? 0 : n - 1).size());
    g.nodes_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "v%0*zu", width, i);
        g.nodes_.emplace_back(buf);
    }
    g.adjacency_.resize(n);
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (const auto& [a, b] : edges) {
        g.arcs_.push_back({a, b, Timestamp{}, ArcKind::Mention, 0});
        if (a != b) pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    finalize_simple_projection(pairs, g.adjacency_, g.simple_edges_);
    return g;
}

void GraphBuilder::add(const Message& m)
{
    const auto ordinal = messages_++;
    handles_.push_back(m.author);
    for (const auto& h : m.mentions) {
        handles_.push_back(h);
        pending_.push_back({m.author, h, m.created_at, ArcKind::Mention, ordinal});
    }
    const auto link = [&](const std::optional<std::string>& ref, ArcKind kind) {
        if (!ref) return;
        const auto target = authors_->author_of(*ref);
        if (!target) {
            ++dangling_;
            return;
        }
        handles_.emplace_back(*target);
        pending_.push_back({m.author, std::string(*target), m.created_at, kind, ordinal});
    };
    link(m.reply_to, ArcKind::Reply);
    link(m.retweet_of, ArcKind::Retweet);
}

InteractionGraph GraphBuilder::finish() &&
{
    InteractionGraph g;
    std::sort(handles_.begin(), handles_.end());
    handles_.erase(std::unique(handles_.begin(), handles_.end()), handles_.end());
    g.nodes_ = std::move(handles_);
    g.adjacency_.resize(g.nodes_.size());
    g.dangling_ = dangling_;
    g.messages_ = messages_;

    const auto id_of = [&](const std::string& h) {
        return NodeId(std::lower_bound(g.nodes_.begin(), g.nodes_.end(), h) - g.nodes_.begin());
    };
    std::vector<std::pair<NodeId, NodeId>> pairs;
    g.arcs_.reserve(pending_.size());
    for (const auto& p : pending_) {
        const NodeId s = id_of(p.source);
        const NodeId t = id_of(p.target);
        g.arcs_.push_back({s, t, p.time, p.kind, p.message});
        if (s != t) pairs.emplace_back(std::min(s, t), std::max(s, t));
    }
    finalize_simple_projection(pairs, g.adjacency_, g.simple_edges_);
    return g;
}

InteractionGraph build_graph(std::span<const Message> messages, const AuthorIndex& authors)
{
    GraphBuilder builder(authors);
    for (const auto& m : messages) builder.add(m);
    return std::move(builder).finish();
}

InteractionGraph build_graph(std::span<const TaggedMessage> messages, const AuthorIndex& authors)
{
    GraphBuilder builder(authors);
    for (const auto& m : messages) builder.add(m.message);
    return std::move(builder).finish();
}

std::vector<double> betweenness(const InteractionGraph& g, unsigned threads)
{
    const auto& adj = g.adjacency();
    const std::size_t n = adj.size();
    if (n < 3) return std::vector<double>(n, 0.0);

    const std::size_t chunks = std::min(kBetweennessChunks, n);
    const std::size_t per_chunk = (n + chunks - 1) / chunks;
    std::vector<std::vector<double>> partial(chunks);
    const auto run_chunk = [&](std::size_t c) {
        partial[c] = brandes_betweenness<double>(adj, c * per_chunk, (c + 1) * per_chunk);
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(threads, unsigned(chunks)));
    if (workers == 1) {
        for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t c = w; c < chunks; c += workers) run_chunk(c);
            });
        }
    }

    std::vector<double> total(n, 0.0);
    for (const auto& p : partial) {
        for (std::size_t v = 0; v < n; ++v) total[v] += p[v];
    }
    return total;
}

std::map<std::string, double> betweenness_by_actor(const InteractionGraph& g, unsigned threads)
{
    const auto values = betweenness(g, threads);
    std::map<std::string, double> out;
    for (std::size_t v = 0; v < values.size(); ++v) out.emplace(g.nodes()[v], values[v]);
    return out;
}

double density(const InteractionGraph& g)
{
    const double n = double(g.node_count());
    if (g.node_count() < 2) return 0.0;
    return 2.0 * double(g.simple_edge_count()) / (n * (n - 1.0));
}

double group_degree_centralization(const InteractionGraph& g)
{
    const std::size_t n = g.node_count();
    if (n < 3) return 0.0;
    std::size_t max_degree = 0;
    for (NodeId v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));
    std::size_t spread = 0;
    for (NodeId v = 0; v < n; ++v) spread += max_degree - g.degree(v);
    return double(spread) / (double(n - 1) * double(n - 2));
}

std::vector<double> normalized_betweenness(std::span<const double> b)
{
    const double n = double(b.size());
    std::vector<double> out(b.size(), 0.0);
    if (b.size() < 3) return out;
    const double star_max = (n - 1.0) * (n - 2.0) / 2.0;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = b[i] / star_max;
    return out;
}

double group_betweenness_centralization(std::span<const double> b)
{
    const std::size_t n = b.size();
    if (n < 3) return 0.0;
    const auto normalized = normalized_betweenness(b);
    const double top = *std::max_element(normalized.begin(), normalized.end());
    // Differences at rounding level are ties: node values that are equal in
    // exact arithmetic may differ in the last bits after floating summation.
    const double tie = 64.0 * std::numeric_limits<double>::epsilon() * top;
    double spread = 0.0;
    for (const double x : normalized) {
        const double d = top - x;
        if (d > tie) spread += d;
    }
    return std::clamp(spread / double(n - 1), 0.0, 1.0);
}

double group_betweenness_centralization(const InteractionGraph& g, unsigned threads)
{
    return group_betweenness_centralization(betweenness(g, threads));
}

ConnectivityScores connectivity(const InteractionGraph& g, unsigned threads)
{
    ConnectivityScores s;
    s.node_count = g.node_count();
    s.simple_edge_count = g.simple_edge_count();
    s.density = density(g);
    s.group_degree_centralization = group_degree_centralization(g);
    s.group_betweenness_centralization = group_betweenness_centralization(g, threads);
    return s;
}

} // namespace coreval
