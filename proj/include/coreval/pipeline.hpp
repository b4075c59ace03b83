#pragma once

#include <array>
#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "coreval/corpus.hpp"
#include "coreval/dynamics.hpp"
#include "coreval/graph.hpp"
#include "coreval/hierarchy.hpp"
#include "coreval/language.hpp"

namespace coreval {

struct RunConfig {
    std::filesystem::path corpus;
    std::optional<std::filesystem::path> orientation_lexicon;
    std::optional<std::filesystem::path> polar_lexicon;
    std::optional<std::filesystem::path> reference_dictionary;

    std::chrono::seconds window_length{86400};
    std::optional<std::chrono::seconds> response_cutoff;
    LeadershipMode leadership_mode = LeadershipMode::Group;
    HierarchyConfig hierarchy;

    std::filesystem::path output_dir; // empty: nothing written
    bool export_csv = false;
    bool export_graphml = false;
    bool export_dot = false;
    unsigned threads = 1;
    std::uint64_t seed = 0;

    /// Applies the keys of a JSON config object on top of `base`.
    /// Unknown keys and ill-typed values throw ConfigError.
    static RunConfig from_json_text(std::string_view json_text, RunConfig base);
    static RunConfig from_json_text(std::string_view json_text);
    static RunConfig load(const std::filesystem::path& path, RunConfig base);
    static RunConfig load(const std::filesystem::path& path);

    /// Throws ConfigError for invalid thresholds, window length or thread count.
    void validate() const;
};

std::string_view to_string(LeadershipMode mode);
std::optional<LeadershipMode> parse_leadership_mode(std::string_view name);

/// Everything measured for one orientation.
struct OrientationAnalysis {
    std::size_t messages = 0;
    InteractionGraph graph;
    WindowSeries windows;
    MetricVector metrics;
};

struct CorpusAnalysis {
    std::array<OrientationAnalysis, kOrientationCount> orientations;
    std::size_t corpus_messages = 0;
    std::size_t skipped_records = 0;
    std::size_t kept = 0;
    std::size_t discarded = 0;
    std::size_t dangling_references = 0;
    WindowGrid grid;
};

struct AnalysisSettings {
    const OrientationLexicon* lexicon = &OrientationLexicon::builtin();
    const SentimentScorer* scorer = &LexiconSentimentScorer::builtin();
    const ReferenceDictionary* reference = nullptr; // null: built from the corpus
    std::chrono::seconds window_length{86400};
    std::optional<std::chrono::seconds> response_cutoff;
    LeadershipMode leadership_mode = LeadershipMode::Group;
    unsigned threads = 1;
};

/// Corpus -> partitions -> graphs, windows, and the twelve raw metrics per orientation.
CorpusAnalysis analyze_corpus(const ParsedCorpus& corpus, const AnalysisSettings& settings);

struct ReportEntry {
    Orientation orientation{};
    std::size_t messages = 0;
    Assessment assessment;
    std::optional<CoreValueClass> reference_class;
};

struct HierarchyReport {
    std::string mode; // "run" or "replay"
    std::array<ReportEntry, kOrientationCount> entries;
    std::size_t corpus_messages = 0;
    std::size_t skipped_records = 0;
    std::size_t kept = 0;
    std::size_t discarded = 0;
    std::size_t dangling_references = 0;
    std::size_t window_count = 0;
    std::chrono::seconds window_length{86400};
    LeadershipMode leadership_mode = LeadershipMode::Group;
    HierarchyConfig hierarchy;
    std::vector<std::string> warnings;

    const ReportEntry& operator[](Orientation o) const { return entries[index_of(o)]; }

    /// Pretty-printed JSON. Reals carry six significant digits, orientations
    /// appear in canonical order, so equal inputs give byte-equal output.
    std::string to_json() const;
};

/// Normalization and classification over precomputed raw metrics.
/// `reference` optionally carries expected classes; mismatches become warnings.
HierarchyReport assess_metrics(const std::array<MetricVector, kOrientationCount>& metrics,
                               const HierarchyConfig& hierarchy,
                               const std::array<std::optional<CoreValueClass>, kOrientationCount>& reference = {});

HierarchyReport build_report(const CorpusAnalysis& analysis, const AnalysisSettings& settings,
                             const HierarchyConfig& hierarchy);

struct MetricTable {
    std::array<MetricVector, kOrientationCount> metrics;
    std::array<std::optional<CoreValueClass>, kOrientationCount> reference;
};

/// Reads {"orientations": {"<Name>": {"<metric>": number, ..., "reference_class": "<Class>"}}}.
/// Throws InputError on malformed input or fewer than two orientations.
MetricTable parse_metric_table(std::string_view json_text);
MetricTable load_metric_table(const std::filesystem::path& path);

/// Replay mode: raw metric file -> normalization -> classification.
HierarchyReport replay_metrics(const std::filesystem::path& path, const HierarchyConfig& hierarchy);

/// Full run: loads inputs named by the config, analyzes, writes outputs under
/// output_dir (report.json, metrics.csv, graphs/) and returns the report.
HierarchyReport run_pipeline(const RunConfig& config);

/// Writes one GraphML and/or DOT file per non-empty orientation into `dir`.
void export_graphs(const CorpusAnalysis& analysis, const std::filesystem::path& dir, bool graphml, bool dot);

} // namespace coreval
