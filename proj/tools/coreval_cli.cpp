// coreval: core-value orientation analysis of social media corpora.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coreval/errors.hpp"
#include "coreval/pipeline.hpp"
#include "coreval/synth.hpp"

namespace {

using nlohmann::json;
using namespace coreval;

// Flags that mirror RunConfig keys. Only flags given on the command line are
// turned into a JSON overlay, so they win over the config file.
struct RunFlags {
    std::string config;
    std::string corpus, orientation_lexicon, polar_lexicon, reference_dictionary, output_dir, gbco_mode;
    double window_hours = 0, response_cutoff_hours = 0;
    std::vector<double> interactivity, connectivity, neutral;
    bool centralization_counts_positive = true;
    std::vector<std::string> weights;
    bool csv = false, graphml = false, dot = false;
    unsigned threads = 1;
    std::uint64_t seed = 0;

    void attach(CLI::App& cmd, bool with_outputs)
    {
        cmd.add_option("-c,--config", config, "JSON run configuration")->check(CLI::ExistingFile);
        cmd.add_option("--corpus", corpus, "NDJSON corpus");
        cmd.add_option("--orientation-lexicon", orientation_lexicon, "orientation keyword lexicon (JSON)");
        cmd.add_option("--polar-lexicon", polar_lexicon, "positive/negative term lists (JSON)");
        cmd.add_option("--reference-dictionary", reference_dictionary, "token counts for complexity (JSON)");
        cmd.add_option("--window-hours", window_hours, "leadership window length");
        cmd.add_option("--response-cutoff-hours", response_cutoff_hours, "ignore responses slower than this");
        cmd.add_option("--gbco-mode", gbco_mode, "rotating leadership mode")->check(CLI::IsMember({"group", "actor"}));
        cmd.add_option("--interactivity-thresholds", interactivity, "low high")->expected(2);
        cmd.add_option("--connectivity-thresholds", connectivity, "low high")->expected(2);
        cmd.add_option("--neutral-band", neutral, "negative_max positive_min")->expected(2);
        cmd.add_option("--centralization-counts-positive", centralization_counts_positive,
                       "centralization raises connectivity (true) or lowers it (false)");
        cmd.add_option("--weight", weights, "metric=weight, repeatable");
        cmd.add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 1024u));
        cmd.add_option("--seed", seed, "recorded with the run");
        if (with_outputs) {
            cmd.add_option("-o,--output-dir", output_dir, "directory for report.json and exports");
            cmd.add_flag("--csv", csv, "write metrics.csv");
            cmd.add_flag("--graphml", graphml, "write graphs/<orientation>.graphml");
            cmd.add_flag("--dot", dot, "write graphs/<orientation>.dot");
        }
    }

    json overlay(const CLI::App& cmd) const
    {
        json j = json::object();
        const auto given = [&](const char* name) { return cmd.count(name) > 0; };
        if (given("--corpus")) j["corpus"] = corpus;
        if (given("--orientation-lexicon")) j["orientation_lexicon"] = orientation_lexicon;
        if (given("--polar-lexicon")) j["polar_lexicon"] = polar_lexicon;
        if (given("--reference-dictionary")) j["reference_dictionary"] = reference_dictionary;
        if (given("--window-hours")) j["window_hours"] = window_hours;
        if (given("--response-cutoff-hours")) j["response_cutoff_hours"] = response_cutoff_hours;
        if (given("--gbco-mode")) j["gbco_mode"] = gbco_mode;
        if (given("--interactivity-thresholds")) j["interactivity_thresholds"] = interactivity;
        if (given("--connectivity-thresholds")) j["connectivity_thresholds"] = connectivity;
        if (given("--neutral-band")) j["neutral_band"] = neutral;
        if (given("--centralization-counts-positive")) j["centralization_counts_positive"] = centralization_counts_positive;
        if (given("--threads")) j["threads"] = threads;
        if (given("--seed")) j["seed"] = seed;
        if (cmd.get_option_no_throw("--output-dir") && given("--output-dir")) j["output_dir"] = output_dir;
        json exports = json::object();
        if (cmd.get_option_no_throw("--csv") && csv) exports["csv"] = true;
        if (cmd.get_option_no_throw("--graphml") && graphml) exports["graphml"] = true;
        if (cmd.get_option_no_throw("--dot") && dot) exports["dot"] = true;
        if (!exports.empty()) j["export"] = exports;
        if (!weights.empty()) {
            json w = json::object();
            for (const auto& item : weights) {
                const auto eq = item.find('=');
                if (eq == std::string::npos) throw ConfigError("--weight expects metric=weight, got '" + item + "'");
                try {
                    w[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
                } catch (const std::exception&) {
                    throw ConfigError("bad weight in '" + item + "'");
                }
            }
            j["weights"] = w;
        }
        return j;
    }

    RunConfig resolve(const CLI::App& cmd) const
    {
        RunConfig cfg = config.empty() ? RunConfig{} : RunConfig::load(config);
        cfg = RunConfig::from_json_text(overlay(cmd).dump(), cfg);
        cfg.validate();
        return cfg;
    }
};

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

void print_summary(const HierarchyReport& report)
{
    for (const auto& e : report.entries) {
        const auto& c = e.assessment.classification;
        std::fprintf(stderr, "%-24s %-24s %s\n", std::string(to_string(e.orientation)).c_str(),
                     c ? std::string(to_string(c->value)).c_str() : "-", c ? std::string(c->hint).c_str() : "");
    }
    for (const auto& w : report.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Core-value orientation analysis of social media corpora"};
    app.require_subcommand(1);

    RunFlags run_flags;
    auto* run = app.add_subcommand("run", "analyze a corpus and classify each orientation");
    run_flags.attach(*run, true);

    RunFlags replay_flags;
    std::string metrics_file, replay_out;
    auto* replay = app.add_subcommand("replay", "classify precomputed raw metrics");
    replay->add_option("metrics", metrics_file, "raw metric table (JSON)")->required()->check(CLI::ExistingFile);
    replay->add_option("-o,--output", replay_out, "report path (default stdout)");
    replay_flags.attach(*replay, false);

    std::string spec_file, preset, synth_out;
    std::size_t total = 100000;
    std::uint64_t synth_seed = 1;
    bool shuffle = false;
    auto* synth = app.add_subcommand("synth", "generate a synthetic corpus");
    auto* spec_opt = synth->add_option("--spec", spec_file, "generator spec (JSON)")->check(CLI::ExistingFile);
    synth->add_option("--preset", preset, "built-in spec")->check(CLI::IsMember({"crawl-scale"}))->excludes(spec_opt);
    synth->add_option("-n,--messages", total, "total messages for a preset");
    synth->add_option("--seed", synth_seed, "generator seed");
    synth->add_flag("--shuffle", shuffle, "emit records in seeded random order");
    synth->add_option("-o,--output", synth_out, "NDJSON path (default stdout)");

    RunFlags export_flags;
    std::string format = "both", export_dir;
    auto* export_graph = app.add_subcommand("export-graph", "write per-orientation interaction graphs");
    export_flags.attach(*export_graph, false);
    export_graph->add_option("-f,--format", format, "graphml, dot or both")
        ->check(CLI::IsMember({"graphml", "dot", "both"}));
    export_graph->add_option("-o,--output-dir", export_dir, "target directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*run) {
            const auto cfg = run_flags.resolve(*run);
            const auto report = run_pipeline(cfg);
            if (cfg.output_dir.empty()) std::cout << report.to_json();
            print_summary(report);
        } else if (*replay) {
            const auto cfg = replay_flags.resolve(*replay);
            const auto report = replay_metrics(metrics_file, cfg.hierarchy);
            write_text(replay_out, report.to_json());
            print_summary(report);
        } else if (*synth) {
            SynthSpec spec;
            if (!spec_file.empty()) {
                std::ifstream in(spec_file);
                const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
                spec = SynthSpec::from_json_text(text);
            } else {
                spec = SynthSpec::crawl_scale(total);
            }
            auto messages = generate_corpus(spec, synth_seed);
            if (shuffle) shuffle_messages(messages, synth_seed);
            if (synth_out.empty() || synth_out == "-") {
                write_corpus(std::cout, messages);
            } else {
                std::ofstream out(synth_out, std::ios::binary);
                if (!out) throw InputError("cannot write '" + synth_out + "'");
                write_corpus(out, messages);
            }
            std::fprintf(stderr, "%zu messages\n", messages.size());
        } else if (*export_graph) {
            const auto cfg = export_flags.resolve(*export_graph);
            if (cfg.corpus.empty()) throw InputError("no corpus given");
            const auto corpus = load_corpus(cfg.corpus);
            const auto lexicon = cfg.orientation_lexicon ? OrientationLexicon::load(*cfg.orientation_lexicon)
                                                         : OrientationLexicon::builtin();
            AnalysisSettings settings;
            settings.lexicon = &lexicon;
            settings.window_length = cfg.window_length;
            settings.threads = cfg.threads;
            const auto analysis = analyze_corpus(corpus, settings);
            export_graphs(analysis, export_dir, format != "dot", format != "graphml");
        }
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const InputError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
