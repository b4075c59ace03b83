#include "coreval/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "coreval/errors.hpp"
#include "coreval/graph_export.hpp"
#include "coreval/text.hpp"

namespace coreval {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json real(std::optional<double> v)
{
    if (!v || !std::isfinite(*v)) return nullptr;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", *v);
    return std::strtod(buf, nullptr);
}

bool is_count(Metric m)
{
    return m == Metric::Activity || m == Metric::NumberOfActors || m == Metric::RotatingLeadership;
}

ordered_json metric_value(Metric m, std::optional<double> v)
{
    if (v && is_count(m) && std::isfinite(*v)) return static_cast<std::int64_t>(std::llround(*v));
    return real(v);
}

template <typename T, typename F>
ordered_json optional_text(const std::optional<T>& v, F&& name)
{
    if (!v) return nullptr;
    return std::string(name(*v));
}

double hours_of(std::chrono::seconds s) { return double(s.count()) / 3600.0; }

std::chrono::seconds seconds_from_hours(const json& value, const char* key)
{
    if (!value.is_number()) throw ConfigError(std::string(key) + " must be a number");
    const double hours = value.get<double>();
    const double seconds = std::round(hours * 3600.0);
    if (!(seconds >= 1.0) || !std::isfinite(seconds)) throw ConfigError(std::string(key) + " must be positive");
    return std::chrono::seconds{static_cast<std::int64_t>(seconds)};
}

std::pair<double, double> number_pair(const json& value, const char* key)
{
    if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number()) {
        throw ConfigError(std::string(key) + " must be an array of two numbers");
    }
    return {value[0].get<double>(), value[1].get<double>()};
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

std::string_view to_string(LeadershipMode mode)
{
    return mode == LeadershipMode::Group ? "group" : "actor";
}

std::optional<LeadershipMode> parse_leadership_mode(std::string_view name)
{
    if (name == "group") return LeadershipMode::Group;
    if (name == "actor") return LeadershipMode::PerActor;
    return std::nullopt;
}

RunConfig RunConfig::from_json_text(std::string_view json_text, RunConfig cfg)
{
    const json doc = json::parse(json_text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) throw ConfigError("config is not a JSON object");

    const auto path_of = [](const json& v, const char* key) {
        if (!v.is_string()) throw ConfigError(std::string(key) + " must be a string");
        return std::filesystem::path(v.get<std::string>());
    };
    const auto flag = [](const json& v, const char* key) {
        if (!v.is_boolean()) throw ConfigError(std::string(key) + " must be true or false");
        return v.get<bool>();
    };

    for (const auto& [key, value] : doc.items()) {
        if (key == "corpus") {
            cfg.corpus = path_of(value, "corpus");
        } else if (key == "orientation_lexicon") {
            cfg.orientation_lexicon = path_of(value, "orientation_lexicon");
        } else if (key == "polar_lexicon") {
            cfg.polar_lexicon = path_of(value, "polar_lexicon");
        } else if (key == "reference_dictionary") {
            cfg.reference_dictionary = path_of(value, "reference_dictionary");
        } else if (key == "window_hours") {
            cfg.window_length = seconds_from_hours(value, "window_hours");
        } else if (key == "response_cutoff_hours") {
            if (value.is_null()) cfg.response_cutoff.reset();
            else cfg.response_cutoff = seconds_from_hours(value, "response_cutoff_hours");
        } else if (key == "gbco_mode") {
            const auto mode = value.is_string() ? parse_leadership_mode(value.get<std::string>()) : std::nullopt;
            if (!mode) throw ConfigError("gbco_mode must be \"group\" or \"actor\"");
            cfg.leadership_mode = *mode;
        } else if (key == "interactivity_thresholds") {
            const auto [lo, hi] = number_pair(value, "interactivity_thresholds");
            cfg.hierarchy.interactivity = {lo, hi};
        } else if (key == "connectivity_thresholds") {
            const auto [lo, hi] = number_pair(value, "connectivity_thresholds");
            cfg.hierarchy.connectivity = {lo, hi};
        } else if (key == "neutral_band") {
            const auto [lo, hi] = number_pair(value, "neutral_band");
            cfg.hierarchy.neutral = {lo, hi};
        } else if (key == "centralization_counts_positive") {
            cfg.hierarchy.centralization_counts_positive = flag(value, "centralization_counts_positive");
        } else if (key == "weights") {
            if (!value.is_object()) throw ConfigError("weights must be an object");
            for (const auto& [metric_key, w] : value.items()) {
                const auto m = parse_metric(metric_key);
                if (!m) throw ConfigError("unknown metric '" + metric_key + "' in weights");
                if (!w.is_number()) throw ConfigError("weight for '" + metric_key + "' must be a number");
                cfg.hierarchy.weights[index_of(*m)] = w.get<double>();
            }
        } else if (key == "output_dir") {
            cfg.output_dir = path_of(value, "output_dir");
        } else if (key == "export") {
            if (!value.is_object()) throw ConfigError("export must be an object");
            for (const auto& [name, v] : value.items()) {
                if (name == "csv") cfg.export_csv = flag(v, "export.csv");
                else if (name == "graphml") cfg.export_graphml = flag(v, "export.graphml");
                else if (name == "dot") cfg.export_dot = flag(v, "export.dot");
                else throw ConfigError("unknown export toggle '" + name + "'");
            }
        } else if (key == "threads") {
            if (!value.is_number_unsigned()) throw ConfigError("threads must be a positive integer");
            cfg.threads = value.get<unsigned>();
        } else if (key == "seed") {
            if (!value.is_number_unsigned()) throw ConfigError("seed must be a non-negative integer");
            cfg.seed = value.get<std::uint64_t>();
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    return cfg;
}

RunConfig RunConfig::load(const std::filesystem::path& path, RunConfig base)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const RunConfig before = base;
    RunConfig cfg = from_json_text(text, std::move(base));

    // Paths named in the file are relative to the file.
    const auto dir = path.parent_path();
    const auto rebase = [&](std::filesystem::path& p, const std::filesystem::path& old) {
        if (p != old && !p.empty() && p.is_relative()) p = dir / p;
    };
    const auto rebase_opt = [&](std::optional<std::filesystem::path>& p, const std::optional<std::filesystem::path>& old) {
        if (p && p != old && p->is_relative()) *p = dir / *p;
    };
    rebase(cfg.corpus, before.corpus);
    rebase(cfg.output_dir, before.output_dir);
    rebase_opt(cfg.orientation_lexicon, before.orientation_lexicon);
    rebase_opt(cfg.polar_lexicon, before.polar_lexicon);
    rebase_opt(cfg.reference_dictionary, before.reference_dictionary);
    return cfg;
}

RunConfig RunConfig::from_json_text(std::string_view json_text) { return from_json_text(json_text, RunConfig{}); }

RunConfig RunConfig::load(const std::filesystem::path& path) { return load(path, RunConfig{}); }

void RunConfig::validate() const
{
    hierarchy.validate();
    if (window_length.count() <= 0) throw ConfigError("window length must be positive");
    if (response_cutoff && response_cutoff->count() <= 0) throw ConfigError("response cutoff must be positive");
    if (threads == 0) throw ConfigError("threads must be at least 1");
}

CorpusAnalysis analyze_corpus(const ParsedCorpus& corpus, const AnalysisSettings& settings)
{
    CorpusAnalysis out;
    out.corpus_messages = corpus.messages.size();
    out.skipped_records = corpus.skipped;

    const auto partition = filter_and_partition(corpus.messages, *settings.lexicon);
    out.kept = partition.kept;
    out.discarded = partition.discarded;

    const AuthorIndex authors(corpus.messages);
    for (const auto& m : corpus.messages) {
        if (m.reply_to && !authors.author_of(*m.reply_to)) ++out.dangling_references;
        if (m.retweet_of && !authors.author_of(*m.retweet_of)) ++out.dangling_references;
    }
    out.grid = WindowGrid::covering(corpus.messages, settings.window_length);

    std::optional<ReferenceDictionary> own_reference;
    if (!settings.reference) {
        ReferenceCounter counter;
        for (const auto& m : corpus.messages) counter.add(tokenize(m.text));
        own_reference = counter.build();
    }
    const ReferenceDictionary& reference = settings.reference ? *settings.reference : *own_reference;

    for (auto o : kAllOrientations) {
        const auto& list = partition[o];
        auto& result = out.orientations[index_of(o)];
        result.messages = list.size();
        if (list.empty()) continue;

        result.graph = build_graph(list, authors);
        result.windows = build_window_series(list, authors, out.grid, settings.threads);
        const auto conn = connectivity(result.graph, settings.threads);

        auto& mv = result.metrics;
        mv[Metric::GroupDegreeCentralization] = conn.group_degree_centralization;
        mv[Metric::GroupBetweennessCentralization] = conn.group_betweenness_centralization;
        mv[Metric::Density] = conn.density;
        mv[Metric::AverageResponseTime] = average_response_time(result.graph, settings.response_cutoff);
        mv[Metric::Nudges] = nudges(result.graph);
        const auto actors = result.graph.node_count();
        const auto events = activity(std::span<const TaggedMessage>(list));
        mv[Metric::NumberOfActors] = double(actors);
        mv[Metric::Activity] = double(events);
        if (actors > 0) mv[Metric::AverageActivityPerActor] = double(events) / double(actors);
        mv[Metric::RotatingLeadership] = double(rotating_leadership(result.windows, settings.leadership_mode));

        std::vector<double> sentiments;
        sentiments.reserve(list.size());
        Surprisal pooled;
        for (const auto& tm : list) {
            sentiments.push_back(settings.scorer->score(tm.message.text));
            pooled += surprisal(tokenize(tm.message.text), reference);
        }
        mv[Metric::Sentiment] = mean_sentiment(sentiments);
        mv[Metric::Emotionality] = emotionality(sentiments);
        mv[Metric::Complexity] = pooled.mean();
    }
    return out;
}

HierarchyReport assess_metrics(const std::array<MetricVector, kOrientationCount>& metrics,
                               const HierarchyConfig& hierarchy,
                               const std::array<std::optional<CoreValueClass>, kOrientationCount>& reference)
{
    HierarchyReport report;
    report.mode = "replay";
    report.hierarchy = hierarchy;
    const auto assessed = assess(metrics, hierarchy);
    for (auto o : kAllOrientations) {
        auto& e = report.entries[index_of(o)];
        e.orientation = o;
        e.assessment = assessed[index_of(o)];
        e.reference_class = reference[index_of(o)];

        const auto name = std::string(to_string(o));
        const auto& a = e.assessment;
        if (!a.classification) {
            report.warnings.push_back(name + ": not classified, inputs are missing");
            continue;
        }
        if (e.reference_class && *e.reference_class != a.classification->value) {
            std::string why;
            if (a.interactivity_band == Band::Low) why = "; low interactivity always maps to Void";
            report.warnings.push_back(name + ": classified " + std::string(to_string(a.classification->value)) +
                                      " but the reference lists " + std::string(to_string(*e.reference_class)) +
                                      why);
        }
    }
    return report;
}

HierarchyReport build_report(const CorpusAnalysis& analysis, const AnalysisSettings& settings,
                             const HierarchyConfig& hierarchy)
{
    std::array<MetricVector, kOrientationCount> metrics;
    for (auto o : kAllOrientations) metrics[index_of(o)] = analysis.orientations[index_of(o)].metrics;

    HierarchyReport report = assess_metrics(metrics, hierarchy);
    report.mode = "run";
    report.corpus_messages = analysis.corpus_messages;
    report.skipped_records = analysis.skipped_records;
    report.kept = analysis.kept;
    report.discarded = analysis.discarded;
    report.dangling_references = analysis.dangling_references;
    report.window_count = analysis.grid.count;
    report.window_length = settings.window_length;
    report.leadership_mode = settings.leadership_mode;

    std::vector<std::string> warnings;
    for (auto o : kAllOrientations) {
        report.entries[index_of(o)].messages = analysis.orientations[index_of(o)].messages;
        if (analysis.orientations[index_of(o)].messages == 0) {
            warnings.push_back(std::string(to_string(o)) + ": no messages, metrics absent");
        }
        const auto& cx = analysis.orientations[index_of(o)].metrics[Metric::Complexity];
        if (cx && !std::isfinite(*cx)) {
            warnings.push_back(std::string(to_string(o)) + ": complexity is infinite (zero reference mass)");
        }
    }
    warnings.insert(warnings.end(), report.warnings.begin(), report.warnings.end());
    report.warnings = std::move(warnings);
    return report;
}

std::string HierarchyReport::to_json() const
{
    ordered_json doc;
    doc["mode"] = mode;

    ordered_json run;
    run["corpus_messages"] = corpus_messages;
    run["skipped_records"] = skipped_records;
    run["kept_messages"] = kept;
    run["discarded_untagged"] = discarded;
    run["dangling_references"] = dangling_references;
    run["window_count"] = window_count;
    doc["run"] = run;

    ordered_json config;
    config["window_hours"] = real(hours_of(window_length));
    config["gbco_mode"] = std::string(to_string(leadership_mode));
    config["interactivity_thresholds"] = {real(hierarchy.interactivity.low), real(hierarchy.interactivity.high)};
    config["connectivity_thresholds"] = {real(hierarchy.connectivity.low), real(hierarchy.connectivity.high)};
    config["neutral_band"] = {real(hierarchy.neutral.negative_max), real(hierarchy.neutral.positive_min)};
    config["centralization_counts_positive"] = hierarchy.centralization_counts_positive;
    ordered_json weights;
    for (auto m : kAllMetrics) {
        if (dimension_of(m) != Dimension::Language) weights[std::string(to_string(m))] = real(hierarchy.weights[index_of(m)]);
    }
    config["weights"] = weights;
    doc["config"] = config;

    ordered_json list = ordered_json::array();
    for (const auto& e : entries) {
        const auto& a = e.assessment;
        ordered_json item;
        item["orientation"] = std::string(to_string(e.orientation));
        item["messages"] = e.messages;
        ordered_json raw, mm, corrected;
        for (auto m : kAllMetrics) {
            const auto key = std::string(to_string(m));
            raw[key] = metric_value(m, a.raw[m]);
            mm[key] = real(a.mm[index_of(m)]);
            corrected[key] = real(a.corrected[index_of(m)]);
        }
        item["raw"] = raw;
        item["mm"] = mm;
        item["direction_corrected"] = corrected;
        item["composites"] = {{"connectivity", real(a.connectivity_composite)},
                              {"interactivity", real(a.interactivity_composite)}};
        const auto band_name = [](Band b) { return to_string(b); };
        item["bands"] = {{"connectivity", optional_text(a.connectivity_band, band_name)},
                         {"interactivity", optional_text(a.interactivity_band, band_name)}};
        item["attitude"] = optional_text(a.attitude, [](Attitude x) { return to_string(x); });
        if (a.classification) {
            item["class"] = std::string(to_string(a.classification->value));
            item["class_label"] = std::string(label(a.classification->value));
            item["hint"] = std::string(a.classification->hint);
        } else {
            item["class"] = nullptr;
            item["class_label"] = nullptr;
            item["hint"] = nullptr;
        }
        if (e.reference_class) item["reference_class"] = std::string(to_string(*e.reference_class));
        list.push_back(std::move(item));
    }
    doc["orientations"] = std::move(list);
    doc["warnings"] = warnings;
    return doc.dump(2) + "\n";
}

MetricTable parse_metric_table(std::string_view json_text)
{
    const json doc = json::parse(json_text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) throw InputError("metric file is not a JSON object");
    const auto it = doc.find("orientations");
    if (it == doc.end() || !it->is_object()) throw InputError("metric file needs an \"orientations\" object");

    MetricTable table;
    std::size_t count = 0;
    for (const auto& [name, entry] : it->items()) {
        const auto o = parse_orientation(name);
        if (!o) throw InputError("unknown orientation '" + name + "' in metric file");
        if (!entry.is_object()) throw InputError("metrics for '" + name + "' must be an object");
        auto& mv = table.metrics[index_of(*o)];
        for (const auto& [key, value] : entry.items()) {
            if (key == "reference_class") {
                const auto c = value.is_string() ? parse_class(value.get<std::string>()) : std::nullopt;
                if (!c) throw InputError("unknown reference_class for '" + name + "'");
                table.reference[index_of(*o)] = c;
                continue;
            }
            const auto m = parse_metric(key);
            if (!m) throw InputError("unknown metric '" + key + "' for '" + name + "'");
            if (value.is_null()) continue;
            if (!value.is_number()) throw InputError("metric '" + key + "' for '" + name + "' is not a number");
            mv[*m] = value.get<double>();
        }
        ++count;
    }
    if (count < 2) throw InputError("metric file needs at least two orientations");
    return table;
}

MetricTable load_metric_table(const std::filesystem::path& path)
{
    return parse_metric_table(read_file(path));
}

HierarchyReport replay_metrics(const std::filesystem::path& path, const HierarchyConfig& hierarchy)
{
    const auto table = load_metric_table(path);
    return assess_metrics(table.metrics, hierarchy, table.reference);
}

void export_graphs(const CorpusAnalysis& analysis, const std::filesystem::path& dir, bool graphml, bool dot)
{
    std::filesystem::create_directories(dir);
    for (auto o : kAllOrientations) {
        const auto& result = analysis.orientations[index_of(o)];
        if (result.messages == 0) continue;
        const auto stem = dir / std::string(to_string(o));
        if (graphml) {
            std::ofstream out(stem.string() + ".graphml");
            write_graphml(out, result.graph, o);
        }
        if (dot) {
            std::ofstream out(stem.string() + ".dot");
            write_dot(out, result.graph, o);
        }
    }
}

HierarchyReport run_pipeline(const RunConfig& config)
{
    config.validate();
    if (config.corpus.empty()) throw InputError("no corpus given");
    if (!std::filesystem::is_regular_file(config.corpus)) {
        throw InputError("corpus '" + config.corpus.string() + "' does not exist");
    }

    const auto lexicon = config.orientation_lexicon ? OrientationLexicon::load(*config.orientation_lexicon)
                                                    : OrientationLexicon::builtin();
    const auto scorer = config.polar_lexicon ? LexiconSentimentScorer::load(*config.polar_lexicon)
                                             : LexiconSentimentScorer::builtin();
    std::optional<ReferenceDictionary> reference;
    if (config.reference_dictionary) reference = ReferenceDictionary::load_counts(*config.reference_dictionary);

    const auto corpus = load_corpus(config.corpus);

    AnalysisSettings settings;
    settings.lexicon = &lexicon;
    settings.scorer = &scorer;
    settings.reference = reference ? &*reference : nullptr;
    settings.window_length = config.window_length;
    settings.response_cutoff = config.response_cutoff;
    settings.leadership_mode = config.leadership_mode;
    settings.threads = config.threads;

    const auto analysis = analyze_corpus(corpus, settings);
    auto report = build_report(analysis, settings, config.hierarchy);

    if (!config.output_dir.empty()) {
        std::filesystem::create_directories(config.output_dir);
        {
            std::ofstream out(config.output_dir / "report.json", std::ios::binary);
            out << report.to_json();
        }
        if (config.export_csv) {
            std::ofstream out(config.output_dir / "metrics.csv", std::ios::binary);
            write_window_csv_header(out);
            for (auto o : kAllOrientations) write_window_csv(out, o, analysis.orientations[index_of(o)].windows);
        }
        if (config.export_graphml || config.export_dot) {
            export_graphs(analysis, config.output_dir / "graphs", config.export_graphml, config.export_dot);
        }
    }
    return report;
}

} // namespace coreval
