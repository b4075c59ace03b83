#pragma once

#include <chrono>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "coreval/corpus.hpp"
#include "coreval/graph.hpp"

namespace coreval {

/// Messages plus every mention, reply reference and retweet reference they carry.
std::size_t activity(std::span<const Message> messages);
std::size_t activity(std::span<const TaggedMessage> messages);

/// Mean lag in hours between a directed contact A->B (mention or reply) and B's
/// first later message that mentions or replies to A. Contacts never answered,
/// or answered after `cutoff`, are left out. Absent when nothing was answered.
std::optional<double> average_response_time(const InteractionGraph& g,
                                            std::optional<std::chrono::seconds> cutoff = std::nullopt);

/// Mean length of runs of consecutive A->B contacts closed by a B->A response.
/// Unanswered runs are ignored. Absent when no run was answered.
std::optional<double> nudges(const InteractionGraph& g);

/// Number of interior strict local extrema after runs of equal values are merged.
/// Fewer than three points yields 0.
std::size_t count_extrema(std::span<const double> series);

enum class LeadershipMode {
    Group,    // extrema of the per-window group betweenness centralization
    PerActor, // extrema of each actor's normalized betweenness, summed over actors
};

struct Window {
    Timestamp start;
    Timestamp end; // exclusive
    InteractionGraph graph;
    std::vector<double> normalized_betweenness; // per node of `graph`
    double group_betweenness_centralization = 0.0;
};

/// Contiguous fixed-length windows in time order.
struct WindowSeries {
    std::vector<Window> windows;
};

/// Tumbling windows aligned to multiples of `length` since the Unix epoch.
struct WindowGrid {
    Timestamp origin{};
    std::chrono::seconds length{86400};
    std::size_t count = 0;

    /// Smallest grid covering every timestamp in `messages`; empty input gives count 0.
    static WindowGrid covering(std::span<const Message> messages, std::chrono::seconds length);
};

/// Splits canonically ordered messages over the grid and measures each window.
/// Messages outside the grid are ignored.
WindowSeries build_window_series(std::span<const TaggedMessage> messages, const AuthorIndex& authors,
                                 const WindowGrid& grid, unsigned threads = 1);

std::size_t rotating_leadership(const WindowSeries& series, LeadershipMode mode = LeadershipMode::Group);

/// CSV rows: orientation,window_start,n_nodes,n_edges,group_betweenness_centralization
void write_window_csv_header(std::ostream& out);
void write_window_csv(std::ostream& out, Orientation orientation, const WindowSeries& series);

} // namespace coreval
