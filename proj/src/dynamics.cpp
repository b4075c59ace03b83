#include "coreval/dynamics.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>
#include <unordered_map>

namespace coreval {
namespace {

struct ContactEvent {
    std::uint32_t message;
    Timestamp time;
};

std::uint64_t pair_key(NodeId source, NodeId target) { return (std::uint64_t(source) << 32) | target; }

// Mention and reply arcs between distinct actors, at most one per (message, source, target).
std::map<std::uint64_t, std::vector<ContactEvent>> contacts_by_pair(const InteractionGraph& g)
{
    std::map<std::uint64_t, std::vector<ContactEvent>> out;
    for (const auto& arc : g.arcs()) {
        if (arc.kind == ArcKind::Retweet || arc.source == arc.target) continue;
        auto& list = out[pair_key(arc.source, arc.target)];
        if (!list.empty() && list.back().message == arc.message) continue;
        list.push_back({arc.message, arc.time});
    }
    return out;
}

std::size_t count_activity(const Message& m)
{
    return 1 + m.mentions.size() + (m.reply_to ? 1 : 0) + (m.retweet_of ? 1 : 0);
}

} // namespace

std::size_t activity(std::span<const Message> messages)
{
    std::size_t total = 0;
    for (const auto& m : messages) total += count_activity(m);
    return total;
}

std::size_t activity(std::span<const TaggedMessage> messages)
{
    std::size_t total = 0;
    for (const auto& m : messages) total += count_activity(m.message);
    return total;
}

std::optional<double> average_response_time(const InteractionGraph& g, std::optional<std::chrono::seconds> cutoff)
{
    const auto contacts = contacts_by_pair(g);
    std::int64_t lag_seconds = 0;
    std::size_t answered = 0;
    for (const auto& [key, events] : contacts) {
        const auto source = NodeId(key >> 32);
        const auto target = NodeId(key & 0xFFFFFFFFu);
        const auto back = contacts.find(pair_key(target, source));
        if (back == contacts.end()) continue;
        const auto& responses = back->second;
        for (const auto& contact : events) {
            const auto it = std::upper_bound(responses.begin(), responses.end(), contact.message,
                                             [](std::uint32_t k, const ContactEvent& e) { return k < e.message; });
            if (it == responses.end()) continue;
            const auto lag = it->time - contact.time;
            if (cutoff && lag > *cutoff) continue;
            lag_seconds += lag.count();
            ++answered;
        }
    }
    if (answered == 0) return std::nullopt;
    return double(lag_seconds) / double(answered) / 3600.0;
}

std::optional<double> nudges(const InteractionGraph& g)
{
    const auto contacts = contacts_by_pair(g);
    std::size_t chain_total = 0;
    std::size_t chains = 0;
    for (const auto& [key, sent] : contacts) {
        const auto source = NodeId(key >> 32);
        const auto target = NodeId(key & 0xFFFFFFFFu);
        const auto back = contacts.find(pair_key(target, source));
        if (back == contacts.end()) continue;
        const auto& received = back->second;

        std::size_t run = 0;
        auto s = sent.begin();
        auto r = received.begin();
        while (s != sent.end() || r != received.end()) {
            if (r == received.end() || (s != sent.end() && s->message < r->message)) {
                ++run;
                ++s;
            } else {
                if (run > 0) {
                    chain_total += run;
                    ++chains;
                    run = 0;
                }
                ++r;
            }
        }
    }
    if (chains == 0) return std::nullopt;
    return double(chain_total) / double(chains);
}

std::size_t count_extrema(std::span<const double> series)
{
    std::vector<double> collapsed;
    collapsed.reserve(series.size());
    for (const double v : series) {
        if (collapsed.empty() || collapsed.back() != v) collapsed.push_back(v);
    }
    std::size_t count = 0;
    for (std::size_t i = 1; i + 1 < collapsed.size(); ++i) {
        const double prev = collapsed[i - 1];
        const double cur = collapsed[i];
        const double next = collapsed[i + 1];
        if ((cur > prev && cur > next) || (cur < prev && cur < next)) ++count;
    }
    return count;
}

WindowGrid WindowGrid::covering(std::span<const Message> messages, std::chrono::seconds length)
{
    WindowGrid grid;
    grid.length = length;
    if (messages.empty() || length.count() <= 0) return grid;
    auto [lo, hi] = std::minmax_element(messages.begin(), messages.end(),
                                        [](const Message& a, const Message& b) { return a.created_at < b.created_at; });
    const auto floor_to = [&](Timestamp t) {
        auto ticks = t.time_since_epoch().count();
        auto q = ticks / length.count();
        if (ticks % length.count() < 0) --q;
        return Timestamp{std::chrono::seconds{q * length.count()}};
    };
    grid.origin = floor_to(lo->created_at);
    grid.count = std::size_t((floor_to(hi->created_at) - grid.origin) / length) + 1;
    return grid;
}

WindowSeries build_window_series(std::span<const TaggedMessage> messages, const AuthorIndex& authors,
                                 const WindowGrid& grid, unsigned threads)
{
    WindowSeries series;
    series.windows.reserve(grid.count);
    std::size_t cursor = 0;
    for (std::size_t w = 0; w < grid.count; ++w) {
        const Timestamp start = grid.origin + grid.length * std::int64_t(w);
        const Timestamp end = start + grid.length;
        GraphBuilder builder(authors);
        while (cursor < messages.size() && messages[cursor].message.created_at < start) ++cursor;
        while (cursor < messages.size() && messages[cursor].message.created_at < end) {
            builder.add(messages[cursor].message);
            ++cursor;
        }
        Window window{start, end, std::move(builder).finish(), {}, 0.0};
        const auto b = betweenness(window.graph, threads);
        window.normalized_betweenness = normalized_betweenness(b);
        window.group_betweenness_centralization = group_betweenness_centralization(b);
        series.windows.push_back(std::move(window));
    }
    return series;
}

std::size_t rotating_leadership(const WindowSeries& series, LeadershipMode mode)
{
    const auto& windows = series.windows;
    if (windows.size() < 3) return 0;
    if (mode == LeadershipMode::Group) {
        std::vector<double> values;
        values.reserve(windows.size());
        for (const auto& w : windows) values.push_back(w.group_betweenness_centralization);
        return count_extrema(values);
    }

    std::map<std::string_view, std::vector<double>> per_actor;
    for (std::size_t i = 0; i < windows.size(); ++i) {
        const auto nodes = windows[i].graph.nodes();
        for (std::size_t v = 0; v < nodes.size(); ++v) {
            auto [it, inserted] = per_actor.try_emplace(nodes[v]);
            if (inserted) it->second.assign(windows.size(), 0.0);
            it->second[i] = windows[i].normalized_betweenness[v];
        }
    }
    std::size_t total = 0;
    for (const auto& [actor, values] : per_actor) total += count_extrema(values);
    return total;
}

void write_window_csv_header(std::ostream& out)
{
    out << "orientation,window_start,n_nodes,n_edges,group_betweenness_centralization\n";
}

void write_window_csv(std::ostream& out, Orientation orientation, const WindowSeries& series)
{
    for (const auto& w : series.windows) {
        char value[32];
        std::snprintf(value, sizeof value, "%.6g", w.group_betweenness_centralization);
        out << to_string(orientation) << ',' << format_rfc3339(w.start) << ',' << w.graph.node_count() << ','
            << w.graph.simple_edge_count() << ',' << value << '\n';
    }
}

} // namespace coreval
