#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "coreval/corpus.hpp"

namespace coreval {

enum class GraphPlant : std::uint8_t { Star, DenseCore, FragmentedDyads };
enum class LagDistribution : std::uint8_t { Constant, Exponential };

/// Generation parameters for one orientation. `messages == 0` leaves it empty.
struct OrientationPlant {
    std::size_t actors = 0;
    std::size_t messages = 0;
    GraphPlant shape = GraphPlant::DenseCore;
    double conversation_share = 0.6; // share of message budget spent on contact/response pairs
    double response_rate = 1.0;      // probability a contact is answered
    LagDistribution lag = LagDistribution::Exponential;
    double lag_hours = 4.0;          // constant lag, or exponential mean
    double positive_bias = 0.7;      // probability a polar word is positive
    double polar_rate = 0.5;         // probability a message carries a polar word
    std::size_t vocabulary = 5000;
    double zipf_exponent = 1.0;
    std::size_t tokens_per_message = 12;
    double retweet_rate = 0.0;
    double multi_tag_rate = 0.0;     // probability of adding a second orientation's keyword
    /// Square-wave plant: star days alternate with dyad days, half a period each.
    /// Replaces `shape` when non-zero.
    std::size_t oscillation_period_days = 0;
};

struct SynthSpec {
    std::int64_t start_unix = 1493596800; // 2017-05-01T00:00:00Z
    std::size_t days = 60;
    std::size_t untagged_messages = 0;
    std::size_t untagged_actors = 1000;
    std::array<OrientationPlant, kOrientationCount> orientations{};

    /// Six orientations sized like a two-month national crawl, plus 30% off-topic
    /// posts, scaled to `total_messages`.
    static SynthSpec crawl_scale(std::size_t total_messages);

    /// JSON with optional keys start, days, untagged_messages, untagged_actors and
    /// an "orientations" object of per-orientation plant objects.
    static SynthSpec from_json_text(std::string_view json_text);

    /// Throws ConfigError for impossible plants.
    void validate() const;
};

/// Deterministic for a given (spec, seed). Messages are returned in canonical order.
std::vector<Message> generate_corpus(const SynthSpec& spec, std::uint64_t seed);

/// Writes NDJSON, one record per line.
void write_corpus(std::ostream& out, std::span<const Message> messages);

/// Seeded Fisher-Yates shuffle with a platform-independent index draw.
void shuffle_messages(std::vector<Message>& messages, std::uint64_t seed);

/// Interior extrema of the planted square wave over `days` daily windows.
std::size_t planted_extrema(std::size_t days, std::size_t period_days);

/// Whether day `d` of an oscillation plant is a star (high) day.
bool oscillation_high(std::size_t day, std::size_t period_days);

} // namespace coreval
