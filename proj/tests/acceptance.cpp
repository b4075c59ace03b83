// Acceptance suite: one PASS/FAIL line per criterion. Tolerances are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "case_study.hpp"
#include "coreval/language.hpp"
#include "coreval/pipeline.hpp"
#include "coreval/synth.hpp"
#include "coreval/text.hpp"
#include "oracles.hpp"

using namespace coreval;

namespace {

constexpr double kMmTolerance = 0.005;
constexpr double kRatioTolerance = 0.01;
constexpr double kUniformTolerance = 1e-9;
constexpr double kReplaySeconds = 1.0;
constexpr double kOracleSeconds = 30.0;
constexpr double kEndToEndSeconds = 300.0;
constexpr std::size_t kOracleGraphs = 200;
constexpr std::size_t kDeterminismMessages = 100000;

std::filesystem::path g_root;
int g_failures = 0;

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void report(int id, const char* name, bool ok, const std::string& detail)
{
    std::printf("%s [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

void criterion_1()
{
    const auto t0 = Clock::now();
    const auto r = replay_metrics(g_root / "data" / "case_study_metrics.json", HierarchyConfig{});
    const double elapsed = seconds_since(t0);
    double worst = 0;
    std::size_t checked = 0;
    for (std::size_t c = 0; c < 6; ++c)
        for (const auto& row : case_study::kRows) {
            const auto& v = r[case_study::kColumns[c]].assessment.mm[index_of(row.metric)];
            worst = std::max(worst, v ? std::abs(*v - row.mm[c]) : 1.0);
            ++checked;
        }
    report(1, "normalization replay", checked == 72 && worst <= kMmTolerance && elapsed < kReplaySeconds,
           fmt("72 values, max |diff| %.4f (tol %.3f), %.3f s", worst, kMmTolerance, elapsed));
}

void criterion_2()
{
    const auto table = load_metric_table(g_root / "data" / "case_study_metrics.json");
    double worst = 0;
    for (auto o : kAllOrientations) {
        const auto& m = table.metrics[index_of(o)];
        const double ratio = *m[Metric::Activity] / *m[Metric::NumberOfActors];
        worst = std::max(worst, std::abs(ratio - *m[Metric::AverageActivityPerActor]));
    }
    report(2, "ratio consistency", worst <= kRatioTolerance,
           fmt("max |activity/actors - average| %.4f (tol %.2f)", worst, kRatioTolerance));
}

void criterion_3()
{
    const auto r = replay_metrics(g_root / "data" / "case_study_metrics.json", HierarchyConfig{});
    std::size_t agree = 0;
    for (std::size_t c = 0; c < 6; ++c) {
        const auto& e = r[case_study::kColumns[c]];
        if (e.assessment.classification && e.assessment.classification->value == case_study::kReferenceClass[c]) ++agree;
    }
    bool warned = false;
    for (const auto& w : r.warnings)
        warned = warned || (w.find("SocialResponsibility") != std::string::npos && w.find("Void") != std::string::npos);
    const auto& sr = r[Orientation::SocialResponsibility].assessment;
    const bool sr_void = sr.classification && sr.classification->value == CoreValueClass::Void;
    report(3, "classification replay", agree >= 5 && warned && sr_void,
           std::to_string(agree) + "/6 agree; SocialResponsibility Void with warning: " + (warned ? "yes" : "no"));
}

void criterion_4()
{
    const auto t0 = Clock::now();
    std::mt19937_64 rng(20240501);
    std::size_t mismatched = 0;
    std::size_t nodes = 0;
    for (std::size_t trial = 0; trial < kOracleGraphs; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        const double p = 0.1 + 0.8 * double(rng() % 1000) / 1000.0;
        const auto adj = oracle::adjacency(n, oracle::random_edges(n, p, rng));
        const auto exact = brandes_betweenness<oracle::Rational>(adj);
        const auto truth = oracle::betweenness_by_enumeration(adj);
        if (exact != truth) ++mismatched;
        nodes += n;
    }
    const double elapsed = seconds_since(t0);
    report(4, "betweenness oracle", mismatched == 0 && elapsed < kOracleSeconds,
           std::to_string(kOracleGraphs) + " graphs, " + std::to_string(nodes) + " nodes, " +
               std::to_string(mismatched) + " rational mismatches, " + fmt("%.2f s", elapsed));
}

void criterion_5()
{
    std::mt19937_64 rng(5);
    std::size_t out_of_range = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 200;
        const double p = std::pow(10.0, -2.5 * double(rng() % 1000) / 1000.0);
        const auto c = connectivity(InteractionGraph::from_edges(n, oracle::random_edges(n, p, rng)));
        for (double x : {c.density, c.group_degree_centralization, c.group_betweenness_centralization})
            if (!(x >= 0.0 && x <= 1.0)) ++out_of_range;
    }
    std::size_t star_bad = 0;
    for (std::size_t n = 3; n <= 200; ++n) {
        const auto c = connectivity(InteractionGraph::from_edges(n, oracle::star(n)));
        if (c.group_degree_centralization != 1.0 || c.group_betweenness_centralization != 1.0) ++star_bad;
    }
    std::vector<std::pair<std::size_t, oracle::Edges>> vt;
    for (std::size_t n = 3; n <= 200; n += 7) vt.emplace_back(n, oracle::cycle(n));
    for (std::size_t n = 3; n <= 30; ++n) vt.emplace_back(n, oracle::complete(n));
    for (unsigned d = 2; d <= 7; ++d) vt.emplace_back(std::size_t(1) << d, oracle::hypercube(d));
    vt.emplace_back(10, oracle::petersen());
    vt.emplace_back(13, oracle::circulant(13, {1, 5}));
    vt.emplace_back(64, oracle::circulant(64, {1, 6, 32}));
    vt.emplace_back(101, oracle::circulant(101, {3, 10, 27}));
    std::size_t vt_bad = 0;
    for (const auto& [n, e] : vt) {
        const auto c = connectivity(InteractionGraph::from_edges(n, e));
        if (c.group_degree_centralization != 0.0 || c.group_betweenness_centralization != 0.0) ++vt_bad;
    }
    report(5, "centralization bounds", out_of_range == 0 && star_bad == 0 && vt_bad == 0,
           "300 random graphs out of [0,1]: " + std::to_string(out_of_range) + "; stars n=3..200 not 1.0: " +
               std::to_string(star_bad) + "; " + std::to_string(vt.size()) + " vertex-transitive not 0.0: " +
               std::to_string(vt_bad));
}

void criterion_6()
{
    std::mt19937_64 rng(6);
    std::size_t bound_bad = 0, transform_bad = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<double> v(3 + rng() % 60);
        for (auto& x : v) x = double(rng() % 7) / 6.0;
        const auto k = count_extrema(v);
        if (k > v.size() - 2) ++bound_bad;
        auto a = v, b = v;
        for (auto& x : a) x = std::exp(4 * x) - 3;
        for (auto& x : b) x = std::atan(x) * 10 + x * x * x;
        if (count_extrema(a) != k || count_extrema(b) != k) ++transform_bad;
    }

    std::size_t recovered = 0, attempts = 0, windows_bad = 0;
    for (std::size_t period : {2u, 3u, 4u, 6u, 7u, 10u, 14u, 30u}) {
        SynthSpec spec;
        spec.days = 60;
        auto& p = spec.orientations[index_of(Orientation::Excellence)];
        p.actors = 25;
        p.messages = 720;
        p.oscillation_period_days = period;
        const ParsedCorpus corpus{generate_corpus(spec, 100 + period), 0};
        const auto a = analyze_corpus(corpus, AnalysisSettings{});
        const auto& o = a.orientations[index_of(Orientation::Excellence)];
        const auto got = std::size_t(*o.metrics[Metric::RotatingLeadership]);
        const auto want = planted_extrema(60, period);
        const std::size_t w = o.windows.windows.size();
        if (got > w - 2) ++windows_bad;
        ++attempts;
        if ((got > want ? got - want : want - got) <= 1) ++recovered;
    }
    report(6, "oscillation properties",
           bound_bad == 0 && transform_bad == 0 && windows_bad == 0 && recovered == attempts,
           "2000 series: bound violations " + std::to_string(bound_bad) + ", transform changes " +
               std::to_string(transform_bad) + "; planted periods recovered within 1: " + std::to_string(recovered) +
               "/" + std::to_string(attempts));
}

void criterion_7()
{
    std::mt19937_64 rng(7);
    std::size_t iff_bad = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<double> s(1 + rng() % 10, 0.5);
        if (rng() % 2) s[rng() % s.size()] = double(rng() % 9) / 8.0;
        const bool neutral = std::all_of(s.begin(), s.end(), [](double x) { return x == 0.5; });
        if ((*emotionality(s) == 0.0) != neutral) ++iff_bad;
    }

    const auto& scorer = LexiconSentimentScorer::builtin();
    const auto swapped = scorer.swapped();
    const std::vector<std::string> words = {"good", "bad", "love", "hate", "proud", "shame", "customer", "the", "best"};
    double swap_err = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        std::string text;
        for (int k = 0, n = int(rng() % 12); k < n; ++k) text += words[rng() % words.size()] + " ";
        swap_err = std::max(swap_err, std::abs(scorer.score(text) + swapped.score(text) - 1.0));
    }

    double uniform_err = 0;
    for (std::size_t v : {2u, 10u, 1000u, 5000u}) {
        std::unordered_map<std::string, double> probs;
        for (std::size_t i = 0; i < v; ++i) probs["u" + std::to_string(i)] = 1.0 / double(v);
        const ReferenceDictionary ref(probs, 0.0);
        std::vector<std::string> text;
        for (std::size_t i = 0; i < 4 * v; ++i) text.push_back("u" + std::to_string(rng() % v));
        uniform_err = std::max(uniform_err, std::abs(*complexity(text, ref) - std::log(double(v))));
    }

    SynthSpec spec;
    spec.days = 30;
    auto& p = spec.orientations[index_of(Orientation::Customers)];
    p.actors = 500;
    p.messages = 10000;
    p.vocabulary = 5000;
    p.zipf_exponent = 1.0;
    const auto ms = generate_corpus(spec, 77);
    ReferenceCounter counter;
    std::vector<std::string> pooled;
    for (const auto& m : ms) {
        const auto t = tokenize(m.text);
        counter.add(t);
        pooled.insert(pooled.end(), t.begin(), t.end());
    }
    const double zipf = *complexity(pooled, counter.build());

    report(7, "language properties",
           iff_bad == 0 && swap_err <= 1e-15 && uniform_err <= kUniformTolerance && zipf >= 5.0 && zipf <= 10.0,
           "emotionality iff violations " + std::to_string(iff_bad) +
               fmt("; swap max err %.1e; uniform max |c - ln V| %.1e", swap_err, uniform_err) +
               fmt("; Zipf corpus complexity %.3f in [5,10]", zipf));
}

void criterion_8()
{
    const auto dir = std::filesystem::temp_directory_path() / "coreval_acceptance";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);

    const auto messages = generate_corpus(SynthSpec::crawl_scale(kDeterminismMessages), 2017);
    const auto write_shuffled = [&](std::uint64_t seed, const char* name) {
        auto copy = messages;
        shuffle_messages(copy, seed);
        std::ofstream out(dir / name, std::ios::binary);
        write_corpus(out, copy);
        return dir / name;
    };
    const auto first = write_shuffled(1, "a.jsonl");
    const auto second = write_shuffled(2, "b.jsonl");

    const auto run = [&](const std::filesystem::path& corpus, unsigned threads, double& seconds) {
        RunConfig cfg;
        cfg.corpus = corpus;
        cfg.threads = threads;
        const auto t0 = Clock::now();
        const auto r = run_pipeline(cfg);
        seconds = seconds_since(t0);
        return r;
    };
    double s1 = 0, s2 = 0;
    const auto r1 = run(first, 1, s1);
    const auto r2 = run(second, 4, s2);
    const auto j1 = r1.to_json();
    const auto j2 = r2.to_json();
    const bool identical = j1 == j2;
    const bool sixty = r1.window_count == 60;
    const double slowest = std::max(s1, s2);
    std::filesystem::remove_all(dir);
    report(8, "determinism at scale",
           identical && sixty && r1.corpus_messages == kDeterminismMessages && slowest < kEndToEndSeconds,
           std::to_string(r1.corpus_messages) + " messages, " + std::to_string(r1.window_count) +
               " windows, reports " + (identical ? "byte-identical" : "DIFFER") + " (" + std::to_string(j1.size()) +
               " bytes)" + fmt(", slowest run %.1f s (limit %.0f s)", slowest, kEndToEndSeconds));
}

void criterion_9()
{
    const std::map<CoreValueClass, std::string> hints = {
        {CoreValueClass::Active, "At the heart of any strategic process"},
        {CoreValueClass::ActiveNeutralOrNegative, "Immediate attention, consider to gradually divest"},
        {CoreValueClass::ActiveDisaggregated, "Immediate attention, verify the convergence among stakeholders"},
        {CoreValueClass::Latent, "Periodic attention"},
        {CoreValueClass::LatentNegative, "Periodic attention, consider to gradually divest"},
        {CoreValueClass::LatentDisaggregated, "Periodic attention, verify the convergence among stakeholders"},
        {CoreValueClass::Void, "Consider to gradually divest"},
    };
    std::size_t defined = 0, matched = 0;
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < 3; ++i)
            for (int a = 0; a < 3; ++a) {
                const auto cls = classify({Band(c), Band(i), Attitude(a)});
                const auto it = hints.find(cls.value);
                if (it == hints.end()) continue;
                ++defined;
                if (std::string(cls.hint) == it->second) ++matched;
            }
    report(9, "classifier totality", defined == 27 && matched == 27,
           std::to_string(defined) + "/27 triples classified, " + std::to_string(matched) + "/27 hints byte-match");
}

} // namespace

int main(int argc, char** argv)
{
    g_root = argc > 1 ? std::filesystem::path(argv[1]) : oracle::source_dir();
    const std::pair<void (*)(), const char*> criteria[] = {
        {criterion_1, "normalization replay"}, {criterion_2, "ratio consistency"},
        {criterion_3, "classification replay"}, {criterion_4, "betweenness oracle"},
        {criterion_5, "centralization bounds"}, {criterion_6, "oscillation properties"},
        {criterion_7, "language properties"},  {criterion_8, "determinism at scale"},
        {criterion_9, "classifier totality"},
    };
    int id = 1;
    for (const auto& [fn, name] : criteria) {
        try {
            fn();
        } catch (const std::exception& e) {
            report(id, name, false, std::string("threw: ") + e.what());
        }
        ++id;
    }
    std::printf("%d of 9 criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
