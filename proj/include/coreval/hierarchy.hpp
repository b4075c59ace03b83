#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "coreval/orientation.hpp"

namespace coreval {

enum class Metric : std::uint8_t {
    GroupDegreeCentralization,
    GroupBetweennessCentralization,
    Density,
    AverageResponseTime,
    Nudges,
    NumberOfActors,
    Activity,
    AverageActivityPerActor,
    RotatingLeadership,
    Sentiment,
    Emotionality,
    Complexity,
};

inline constexpr std::size_t kMetricCount = 12;

inline constexpr std::array<Metric, kMetricCount> kAllMetrics = {
    Metric::GroupDegreeCentralization, Metric::GroupBetweennessCentralization,
    Metric::Density,                   Metric::AverageResponseTime,
    Metric::Nudges,                    Metric::NumberOfActors,
    Metric::Activity,                  Metric::AverageActivityPerActor,
    Metric::RotatingLeadership,        Metric::Sentiment,
    Metric::Emotionality,              Metric::Complexity,
};

enum class Dimension : std::uint8_t { Connectivity, Interactivity, Language };
enum class Direction : std::uint8_t { HigherIsMore, LowerIsMore };

constexpr std::size_t index_of(Metric m) { return static_cast<std::size_t>(m); }
Dimension dimension_of(Metric m);

/// snake_case key used in reports and metric files, e.g. "average_response_time".
std::string_view to_string(Metric m);
std::optional<Metric> parse_metric(std::string_view key);

/// Raw scores of one orientation; a missing value is std::nullopt.
struct MetricVector {
    std::array<std::optional<double>, kMetricCount> values{};

    std::optional<double>& operator[](Metric m) { return values[index_of(m)]; }
    const std::optional<double>& operator[](Metric m) const { return values[index_of(m)]; }
};

using Scores = std::array<std::optional<double>, kMetricCount>;

/// (x - min) / (max - min) over the present values. All-equal input maps to 0.5;
/// fewer than two present values leaves everything absent.
std::vector<std::optional<double>> min_max_normalize(std::span<const std::optional<double>> values);

/// Weighted mean of the present values; weights of absent values drop out.
/// Absent when no present value carries weight. Throws ConfigError on a
/// negative weight, all-zero weights, or mismatched lengths.
std::optional<double> composite(std::span<const std::optional<double>> values, std::span<const double> weights);

enum class Band : std::uint8_t { Low, Intermediate, High };
enum class Attitude : std::uint8_t { Negative, Neutral, Positive };

std::string_view to_string(Band b);
std::string_view to_string(Attitude a);

struct BandThresholds {
    double low;
    double high;
};

/// Low below `low`, High at or above `high`, Intermediate otherwise.
Band band(double value, BandThresholds thresholds);

struct NeutralBand {
    double negative_max = 0.45; // s <= negative_max is negative
    double positive_min = 0.55; // s >= positive_min is positive
};

Attitude attitude(double sentiment, NeutralBand neutral = {});

enum class CoreValueClass : std::uint8_t {
    Active,
    ActiveNeutralOrNegative,
    ActiveDisaggregated,
    Latent,
    LatentNegative,
    LatentDisaggregated,
    Void,
};

inline constexpr std::array<CoreValueClass, 7> kAllClasses = {
    CoreValueClass::Active,         CoreValueClass::ActiveNeutralOrNegative, CoreValueClass::ActiveDisaggregated,
    CoreValueClass::Latent,         CoreValueClass::LatentNegative,          CoreValueClass::LatentDisaggregated,
    CoreValueClass::Void,
};

std::string_view to_string(CoreValueClass c);
std::optional<CoreValueClass> parse_class(std::string_view name);

/// Human-readable class name, e.g. "Active but on disaggregated groups".
std::string_view label(CoreValueClass c);
std::string_view strategy_hint(CoreValueClass c);

struct DimensionBands {
    Band connectivity;
    Band interactivity;
    Attitude attitude;
};

struct Classification {
    CoreValueClass value;
    std::string_view hint;
};

/// Interactivity decides the family (Low: Void, High: Active, Intermediate:
/// Latent); low connectivity selects the disaggregated variant, and attitude
/// the negative variant.
Classification classify(const DimensionBands& bands);

struct HierarchyConfig {
    BandThresholds interactivity{0.30, 0.45};
    BandThresholds connectivity{0.50, 0.75};
    NeutralBand neutral{};
    std::array<double, kMetricCount> weights = {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
    // When false, the two centralization metrics enter the connectivity composite as 1 - MM.
    bool centralization_counts_positive = true;

    Direction direction(Metric m) const;

    /// Throws ConfigError for thresholds outside 0 < low < high < 1, an
    /// inverted neutral band, or unusable composite weights.
    void validate() const;
};

struct Assessment {
    MetricVector raw;
    Scores mm{};
    Scores corrected{}; // MM, or 1 - MM for lower-is-more metrics
    std::optional<double> connectivity_composite;
    std::optional<double> interactivity_composite;
    std::optional<Band> connectivity_band;
    std::optional<Band> interactivity_band;
    std::optional<Attitude> attitude;
    std::optional<Classification> classification;
};

/// Normalizes each metric across the orientations, builds the composites and
/// classifies every orientation that has the inputs to be classified.
std::array<Assessment, kOrientationCount> assess(const std::array<MetricVector, kOrientationCount>& raw,
                                                 const HierarchyConfig& config);

} // namespace coreval
