#include <doctest.h>

#include <cmath>
#include <map>

#include "case_study.hpp"
#include "coreval/errors.hpp"
#include "coreval/hierarchy.hpp"

using namespace coreval;

namespace {

std::vector<std::optional<double>> col(std::initializer_list<double> xs) { return {xs.begin(), xs.end()}; }

} // namespace

TEST_CASE("min-max normalization")
{
    const auto gdc = min_max_normalize(col({0.015, 0.024, 0.037, 0.056, 0.013, 0.069}));
    const std::array<double, 6> expect = {0.04, 0.20, 0.43, 0.77, 0.00, 1.00};
    for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(*gdc[i] - expect[i]) <= 0.005);

    const auto flat = min_max_normalize(col({3, 3, 3}));
    for (const auto& v : flat) CHECK(*v == 0.5);

    std::vector<std::optional<double>> gaps = {1.0, std::nullopt, 3.0};
    const auto g = min_max_normalize(gaps);
    CHECK(*g[0] == 0.0);
    CHECK_FALSE(g[1]);
    CHECK(*g[2] == 1.0);

    std::vector<std::optional<double>> lone = {std::nullopt, 2.0};
    for (const auto& v : min_max_normalize(lone)) CHECK_FALSE(v);
}

TEST_CASE("every published min-max value is reproduced")
{
    for (const auto& row : case_study::kRows) {
        std::vector<std::optional<double>> raw(row.raw.begin(), row.raw.end());
        const auto mm = min_max_normalize(raw);
        for (std::size_t c = 0; c < 6; ++c) CHECK(std::abs(*mm[c] - row.mm[c]) <= 0.005);
    }
}

TEST_CASE("composite")
{
    const std::vector<double> w6(6, 1.0);
    // Interactivity of the first and last columns, ART direction-corrected.
    CHECK(*composite(col({1 - 1.00, 1.00, 1.00, 1.00, 0.71, 1.00}), w6) == doctest::Approx(0.785).epsilon(1e-3));
    CHECK(*composite(col({1 - 0.43, 0.00, 0.00, 0.00, 0.35, 0.17}), w6) == doctest::Approx(0.182).epsilon(1e-3));
    CHECK(*composite(col({0.3, 0.3, 0.3}), std::vector<double>{1, 2, 3}) == doctest::Approx(0.3));

    std::vector<std::optional<double>> holes = {0.2, std::nullopt, 0.8};
    CHECK(*composite(holes, std::vector<double>{1, 5, 3}) == doctest::Approx((0.2 + 2.4) / 4));
    std::vector<std::optional<double>> none = {std::nullopt, std::nullopt};
    CHECK_FALSE(composite(none, std::vector<double>{1, 1}));
    CHECK_THROWS_AS(composite(holes, std::vector<double>{1, -1, 1}), ConfigError);
    CHECK_THROWS_AS(composite(holes, std::vector<double>{0, 0, 0}), ConfigError);
    CHECK_THROWS_AS(composite(holes, std::vector<double>{1, 1}), ConfigError);
}

TEST_CASE("bands and attitude")
{
    const BandThresholds inter{0.30, 0.45};
    CHECK(band(0.785, inter) == Band::High);
    CHECK(band(0.45, inter) == Band::High);
    CHECK(band(0.30, inter) == Band::Intermediate);
    CHECK(band(0.2999, inter) == Band::Low);
    CHECK(band(0.04, {0.50, 0.75}) == Band::Low);
    CHECK(attitude(0.695) == Attitude::Positive);
    CHECK(attitude(0.5) == Attitude::Neutral);
    CHECK(attitude(0.40) == Attitude::Negative);
    CHECK(attitude(0.45) == Attitude::Negative);
    CHECK(attitude(0.55) == Attitude::Positive);
}

TEST_CASE("all 27 band triples classify with the published hint")
{
    // Expected class per (interactivity, connectivity, attitude), written out by hand.
    using C = CoreValueClass;
    const C table[3][3][3] = {
        // interactivity Low
        {{C::Void, C::Void, C::Void}, {C::Void, C::Void, C::Void}, {C::Void, C::Void, C::Void}},
        // interactivity Intermediate: rows conn Low/Intermediate/High, cols Negative/Neutral/Positive
        {{C::LatentNegative, C::LatentDisaggregated, C::LatentDisaggregated},
         {C::LatentNegative, C::Latent, C::Latent},
         {C::LatentNegative, C::Latent, C::Latent}},
        // interactivity High
        {{C::ActiveDisaggregated, C::ActiveDisaggregated, C::ActiveDisaggregated},
         {C::ActiveNeutralOrNegative, C::ActiveNeutralOrNegative, C::Active},
         {C::ActiveNeutralOrNegative, C::ActiveNeutralOrNegative, C::Active}},
    };
    const std::map<C, std::string> hints = {
        {C::Active, "At the heart of any strategic process"},
        {C::ActiveNeutralOrNegative, "Immediate attention, consider to gradually divest"},
        {C::ActiveDisaggregated, "Immediate attention, verify the convergence among stakeholders"},
        {C::Latent, "Periodic attention"},
        {C::LatentNegative, "Periodic attention, consider to gradually divest"},
        {C::LatentDisaggregated, "Periodic attention, verify the convergence among stakeholders"},
        {C::Void, "Consider to gradually divest"},
    };
    for (int i = 0; i < 3; ++i)
        for (int c = 0; c < 3; ++c)
            for (int a = 0; a < 3; ++a) {
                const auto got = classify({Band(c), Band(i), Attitude(a)});
                CHECK(got.value == table[i][c][a]);
                CHECK(std::string(got.hint) == hints.at(got.value));
                CHECK(got.hint == strategy_hint(got.value));
            }
    for (auto c : kAllClasses) CHECK(parse_class(to_string(c)) == c);
}

TEST_CASE("assess the published scores")
{
    const auto out = assess(case_study::metrics(), HierarchyConfig{});
    std::size_t agree = 0;
    for (std::size_t c = 0; c < 6; ++c) {
        const auto& a = out[index_of(case_study::kColumns[c])];
        REQUIRE(a.classification);
        if (a.classification->value == case_study::kReferenceClass[c]) ++agree;
    }
    CHECK(agree == 5);
    const auto& cust = out[index_of(Orientation::Customers)];
    CHECK(*cust.interactivity_composite == doctest::Approx(0.7847).epsilon(1e-3));
    CHECK(*cust.connectivity_composite == doctest::Approx(0.0397).epsilon(1e-2));
    CHECK(cust.interactivity_band == Band::High);
    CHECK(cust.classification->value == CoreValueClass::ActiveDisaggregated);
    const auto& sr = out[index_of(Orientation::SocialResponsibility)];
    CHECK(*sr.interactivity_composite == doctest::Approx(0.1807).epsilon(1e-3));
    CHECK(sr.classification->value == CoreValueClass::Void);
}

TEST_CASE("identical orientations are treated identically")
{
    std::array<MetricVector, kOrientationCount> raw{};
    for (auto o : {Orientation::Customers, Orientation::Excellence})
        for (auto m : kAllMetrics) raw[index_of(o)][m] = 1.25;
    const auto out = assess(raw, HierarchyConfig{});
    const auto& a = out[index_of(Orientation::Customers)];
    const auto& b = out[index_of(Orientation::Excellence)];
    for (auto m : kAllMetrics) {
        CHECK(*a.mm[index_of(m)] == 0.5);
        CHECK(*b.mm[index_of(m)] == 0.5);
    }
    REQUIRE(a.classification);
    REQUIRE(b.classification);
    CHECK(a.classification->value == b.classification->value);
    CHECK_FALSE(out[index_of(Orientation::Employees)].classification);
}

TEST_CASE("centralization switch and config validation")
{
    HierarchyConfig cfg;
    CHECK(cfg.direction(Metric::AverageResponseTime) == Direction::LowerIsMore);
    CHECK(cfg.direction(Metric::GroupDegreeCentralization) == Direction::HigherIsMore);
    cfg.centralization_counts_positive = false;
    CHECK(cfg.direction(Metric::GroupBetweennessCentralization) == Direction::LowerIsMore);
    CHECK(cfg.direction(Metric::Density) == Direction::HigherIsMore);
    CHECK_NOTHROW(cfg.validate());

    HierarchyConfig bad;
    bad.interactivity = {0.5, 0.4};
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = {};
    bad.neutral = {0.6, 0.5};
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = {};
    bad.weights[0] = -1;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("metric keys round trip")
{
    for (auto m : kAllMetrics) CHECK(parse_metric(to_string(m)) == m);
    CHECK_FALSE(parse_metric("bogus"));
    CHECK(dimension_of(Metric::Nudges) == Dimension::Interactivity);
    CHECK(dimension_of(Metric::Density) == Dimension::Connectivity);
    CHECK(dimension_of(Metric::Complexity) == Dimension::Language);
}
