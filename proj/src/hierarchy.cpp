#include "coreval/hierarchy.hpp"

#include <algorithm>
#include <string>

#include "coreval/errors.hpp"

namespace coreval {

Dimension dimension_of(Metric m)
{
    switch (m) {
    case Metric::GroupDegreeCentralization:
    case Metric::GroupBetweennessCentralization:
    case Metric::Density: return Dimension::Connectivity;
    case Metric::Sentiment:
    case Metric::Emotionality:
    case Metric::Complexity: return Dimension::Language;
    default: return Dimension::Interactivity;
    }
}

std::string_view to_string(Metric m)
{
    switch (m) {
    case Metric::GroupDegreeCentralization: return "group_degree_centralization";
    case Metric::GroupBetweennessCentralization: return "group_betweenness_centralization";
    case Metric::Density: return "density";
    case Metric::AverageResponseTime: return "average_response_time";
    case Metric::Nudges: return "nudges";
    case Metric::NumberOfActors: return "number_of_actors";
    case Metric::Activity: return "activity";
    case Metric::AverageActivityPerActor: return "average_activity_per_actor";
    case Metric::RotatingLeadership: return "rotating_leadership";
    case Metric::Sentiment: return "sentiment";
    case Metric::Emotionality: return "emotionality";
    case Metric::Complexity: return "complexity";
    }
    return "?";
}

std::optional<Metric> parse_metric(std::string_view key)
{
    for (auto m : kAllMetrics) {
        if (to_string(m) == key) return m;
    }
    return std::nullopt;
}

std::vector<std::optional<double>> min_max_normalize(std::span<const std::optional<double>> values)
{
    std::vector<std::optional<double>> out(values.size());
    std::size_t present = 0;
    double lo = 0.0;
    double hi = 0.0;
    for (const auto& v : values) {
        if (!v) continue;
        lo = present == 0 ? *v : std::min(lo, *v);
        hi = present == 0 ? *v : std::max(hi, *v);
        ++present;
    }
    if (present < 2) return out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values[i]) continue;
        out[i] = hi == lo ? 0.5 : (*values[i] - lo) / (hi - lo);
    }
    return out;
}

std::optional<double> composite(std::span<const std::optional<double>> values, std::span<const double> weights)
{
    if (values.size() != weights.size()) throw ConfigError("composite weights do not match the metric count");
    double weight_total = 0.0;
    for (const double w : weights) {
        if (!(w >= 0.0)) throw ConfigError("composite weights must be non-negative");
        weight_total += w;
    }
    if (weight_total <= 0.0) throw ConfigError("composite weights are all zero");

    double sum = 0.0;
    double used = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values[i] || weights[i] == 0.0) continue;
        sum += weights[i] * *values[i];
        used += weights[i];
    }
    if (used == 0.0) return std::nullopt;
    return sum / used;
}

std::string_view to_string(Band b)
{
    switch (b) {
    case Band::Low: return "Low";
    case Band::Intermediate: return "Intermediate";
    case Band::High: return "High";
    }
    return "?";
}

std::string_view to_string(Attitude a)
{
    switch (a) {
    case Attitude::Negative: return "negative";
    case Attitude::Neutral: return "neutral";
    case Attitude::Positive: return "positive";
    }
    return "?";
}

Band band(double value, BandThresholds t)
{
    if (value < t.low) return Band::Low;
    if (value >= t.high) return Band::High;
    return Band::Intermediate;
}

Attitude attitude(double sentiment, NeutralBand neutral)
{
    if (sentiment <= neutral.negative_max) return Attitude::Negative;
    if (sentiment >= neutral.positive_min) return Attitude::Positive;
    return Attitude::Neutral;
}

std::string_view to_string(CoreValueClass c)
{
    switch (c) {
    case CoreValueClass::Active: return "Active";
    case CoreValueClass::ActiveNeutralOrNegative: return "ActiveNeutralOrNegative";
    case CoreValueClass::ActiveDisaggregated: return "ActiveDisaggregated";
    case CoreValueClass::Latent: return "Latent";
    case CoreValueClass::LatentNegative: return "LatentNegative";
    case CoreValueClass::LatentDisaggregated: return "LatentDisaggregated";
    case CoreValueClass::Void: return "Void";
    }
    return "?";
}

std::optional<CoreValueClass> parse_class(std::string_view name)
{
    for (auto c : kAllClasses) {
        if (to_string(c) == name) return c;
    }
    return std::nullopt;
}

std::string_view label(CoreValueClass c)
{
    switch (c) {
    case CoreValueClass::Active: return "Active";
    case CoreValueClass::ActiveNeutralOrNegative: return "Active but with neutral or negative feelings";
    case CoreValueClass::ActiveDisaggregated: return "Active but on disaggregated groups";
    case CoreValueClass::Latent: return "Latent";
    case CoreValueClass::LatentNegative: return "Latent but with negative feelings";
    case CoreValueClass::LatentDisaggregated: return "Latent but on disaggregated groups";
    case CoreValueClass::Void: return "Void";
    }
    return "?";
}

std::string_view strategy_hint(CoreValueClass c)
{
    switch (c) {
    case CoreValueClass::Active: return "At the heart of any strategic process";
    case CoreValueClass::ActiveNeutralOrNegative: return "Immediate attention, consider to gradually divest";
    case CoreValueClass::ActiveDisaggregated: return "Immediate attention, verify the convergence among stakeholders";
    case CoreValueClass::Latent: return "Periodic attention";
    case CoreValueClass::LatentNegative: return "Periodic attention, consider to gradually divest";
    case CoreValueClass::LatentDisaggregated: return "Periodic attention, verify the convergence among stakeholders";
    case CoreValueClass::Void: return "Consider to gradually divest";
    }
    return "?";
}

Classification classify(const DimensionBands& bands)
{
    const auto make = [](CoreValueClass c) { return Classification{c, strategy_hint(c)}; };
    const bool low_connectivity = bands.connectivity == Band::Low;
    const bool negative = bands.attitude == Attitude::Negative;
    switch (bands.interactivity) {
    case Band::Low: return make(CoreValueClass::Void);
    case Band::High:
        if (low_connectivity) return make(CoreValueClass::ActiveDisaggregated);
        return make(bands.attitude == Attitude::Positive ? CoreValueClass::Active
                                                         : CoreValueClass::ActiveNeutralOrNegative);
    case Band::Intermediate:
        if (negative) return make(CoreValueClass::LatentNegative);
        return make(low_connectivity ? CoreValueClass::LatentDisaggregated : CoreValueClass::Latent);
    }
    return make(CoreValueClass::Void);
}

Direction HierarchyConfig::direction(Metric m) const
{
    if (m == Metric::AverageResponseTime) return Direction::LowerIsMore;
    if (!centralization_counts_positive &&
        (m == Metric::GroupDegreeCentralization || m == Metric::GroupBetweennessCentralization)) {
        return Direction::LowerIsMore;
    }
    return Direction::HigherIsMore;
}

void HierarchyConfig::validate() const
{
    const auto check = [](BandThresholds t, const char* name) {
        if (!(t.low > 0.0 && t.low < t.high && t.high < 1.0)) {
            throw ConfigError(std::string(name) + " thresholds must satisfy 0 < low < high < 1");
        }
    };
    check(interactivity, "interactivity");
    check(connectivity, "connectivity");
    if (!(neutral.negative_max >= 0.0 && neutral.negative_max < neutral.positive_min && neutral.positive_min <= 1.0)) {
        throw ConfigError("neutral sentiment band must satisfy 0 <= negative_max < positive_min <= 1");
    }
    for (const auto dim : {Dimension::Connectivity, Dimension::Interactivity}) {
        double total = 0.0;
        for (auto m : kAllMetrics) {
            if (dimension_of(m) != dim) continue;
            if (!(weights[index_of(m)] >= 0.0)) throw ConfigError("composite weights must be non-negative");
            total += weights[index_of(m)];
        }
        if (total <= 0.0) throw ConfigError("composite weights for a dimension are all zero");
    }
}

std::array<Assessment, kOrientationCount> assess(const std::array<MetricVector, kOrientationCount>& raw,
                                                 const HierarchyConfig& config)
{
    config.validate();
    std::array<Assessment, kOrientationCount> out;
    for (std::size_t o = 0; o < kOrientationCount; ++o) out[o].raw = raw[o];

    for (auto m : kAllMetrics) {
        std::array<std::optional<double>, kOrientationCount> column;
        for (std::size_t o = 0; o < kOrientationCount; ++o) column[o] = raw[o][m];
        const auto mm = min_max_normalize(column);
        for (std::size_t o = 0; o < kOrientationCount; ++o) {
            out[o].mm[index_of(m)] = mm[o];
            if (mm[o]) {
                out[o].corrected[index_of(m)] = config.direction(m) == Direction::LowerIsMore ? 1.0 - *mm[o] : *mm[o];
            }
        }
    }

    const auto dimension_composite = [&](const Assessment& a, Dimension dim) {
        std::vector<std::optional<double>> values;
        std::vector<double> weights;
        for (auto m : kAllMetrics) {
            if (dimension_of(m) != dim) continue;
            values.push_back(a.corrected[index_of(m)]);
            weights.push_back(config.weights[index_of(m)]);
        }
        return composite(values, weights);
    };

    for (auto& a : out) {
        a.connectivity_composite = dimension_composite(a, Dimension::Connectivity);
        a.interactivity_composite = dimension_composite(a, Dimension::Interactivity);
        if (a.connectivity_composite) a.connectivity_band = band(*a.connectivity_composite, config.connectivity);
        if (a.interactivity_composite) a.interactivity_band = band(*a.interactivity_composite, config.interactivity);
        if (const auto& s = a.raw[Metric::Sentiment]) a.attitude = attitude(*s, config.neutral);
        if (a.connectivity_band && a.interactivity_band && a.attitude) {
            a.classification = classify({*a.connectivity_band, *a.interactivity_band, *a.attitude});
        } else if (a.interactivity_band == Band::Low) {
            a.classification = classify({Band::Low, Band::Low, Attitude::Neutral});
        }
    }
    return out;
}

} // namespace coreval
