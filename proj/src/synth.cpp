#include "coreval/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include <json.hpp>

#include "coreval/errors.hpp"

namespace coreval {
namespace {

using nlohmann::json;

constexpr std::int64_t kDay = 86400;

// Portable draws on top of mt19937_64.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }
    std::size_t index(std::size_t n)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return std::size_t(x % n);
    }
    bool chance(double p) { return uniform() < p; }
    double exponential(double mean) { return -std::log1p(-uniform()) * mean; }

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

class ZipfSampler {
public:
    ZipfSampler(std::size_t vocabulary, double exponent)
    {
        cdf_.reserve(vocabulary);
        double total = 0.0;
        for (std::size_t r = 1; r <= vocabulary; ++r) {
            total += 1.0 / std::pow(double(r), exponent);
            cdf_.push_back(total);
        }
    }
    std::size_t rank(Rng& rng) const
    {
        const double u = rng.uniform() * cdf_.back();
        return std::size_t(std::upper_bound(cdf_.begin(), cdf_.end(), u) - cdf_.begin()) + 1;
    }

private:
    std::vector<double> cdf_;
};

constexpr std::array<std::string_view, kOrientationCount> kHandlePrefix = {"cus", "emp", "eco", "exc", "cit", "soc"};

std::string handle(std::string_view prefix, std::size_t i)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*s%05zu", int(prefix.size()), prefix.data(), i);
    return buf;
}

std::string join(const std::vector<std::string>& words)
{
    std::string out;
    for (const auto& w : words) {
        if (!out.empty()) out += ' ';
        out += w;
    }
    return out;
}

const std::vector<std::string>& builtin_phrases(Orientation o)
{
    static const auto phrases = [] {
        std::array<std::vector<std::string>, kOrientationCount> out;
        const auto& lex = OrientationLexicon::builtin();
        for (auto x : kAllOrientations) {
            for (const auto& p : lex.phrases(x)) out[index_of(x)].push_back(join(p));
        }
        return out;
    }();
    return phrases[index_of(o)];
}

constexpr std::array<std::string_view, 6> kPositiveWords = {"good", "great", "love", "proud", "thanks", "excellent"};
constexpr std::array<std::string_view, 6> kNegativeWords = {"bad", "terrible", "hate", "shame", "disappointed", "worst"};

class Generator {
public:
    Generator(const SynthSpec& spec, std::uint64_t seed) : spec_(spec), seed_(seed) {}

    std::vector<Message> run()
    {
        for (auto o : kAllOrientations) {
            const auto& plant = spec_.orientations[index_of(o)];
            if (plant.messages == 0) continue;
            Rng rng(splitmix(seed_ ^ splitmix(index_of(o) + 1)));
            if (plant.oscillation_period_days > 0) oscillation(o, plant, rng);
            else organic(o, plant, rng);
        }
        untagged();
        std::sort(out_.begin(), out_.end(), canonical_less);
        return std::move(out_);
    }

private:
    Timestamp at(std::int64_t offset) const { return Timestamp{std::chrono::seconds{spec_.start_unix + offset}}; }
    std::int64_t span() const { return std::int64_t(spec_.days) * kDay; }

    std::string next_id()
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "m%09zu", counter_++);
        return buf;
    }

    std::string text_for(Orientation o, const OrientationPlant& plant, const ZipfSampler& zipf, Rng& rng,
                         const std::vector<std::string>& mentions)
    {
        std::vector<std::string> words;
        for (const auto& m : mentions) words.push_back("@" + m);
        std::vector<std::string> body;
        for (std::size_t i = 0; i < plant.tokens_per_message; ++i) body.push_back("w" + std::to_string(zipf.rank(rng)));
        const auto& phrases = builtin_phrases(o);
        body.insert(body.begin() + std::ptrdiff_t(rng.index(body.size() + 1)), phrases[rng.index(phrases.size())]);
        if (rng.chance(plant.multi_tag_rate)) {
            const auto other = kAllOrientations[(index_of(o) + 1 + rng.index(kOrientationCount - 1)) % kOrientationCount];
            const auto& extra = builtin_phrases(other);
            body.push_back(extra[rng.index(extra.size())]);
        }
        if (rng.chance(plant.polar_rate)) {
            const bool positive = rng.chance(plant.positive_bias);
            body.emplace_back(positive ? kPositiveWords[rng.index(kPositiveWords.size())]
                                       : kNegativeWords[rng.index(kNegativeWords.size())]);
        }
        words.insert(words.end(), body.begin(), body.end());
        return join(words);
    }

    Message& emit(std::string author, Timestamp t, std::string text)
    {
        Message m;
        m.id = next_id();
        m.author = std::move(author);
        m.created_at = t;
        m.text = std::move(text);
        out_.push_back(std::move(m));
        return out_.back();
    }

    std::int64_t draw_lag(const OrientationPlant& plant, Rng& rng) const
    {
        const double mean = plant.lag_hours * 3600.0;
        const double seconds = plant.lag == LagDistribution::Constant ? mean : rng.exponential(mean);
        return std::max<std::int64_t>(1, std::llround(seconds));
    }

    std::pair<std::size_t, std::size_t> pick_pair(const OrientationPlant& plant, Rng& rng)
    {
        const std::size_t a = plant.actors;
        switch (plant.shape) {
        case GraphPlant::Star: {
            const std::size_t leaf = 1 + (cycle_++ % (a - 1));
            return {leaf, 0};
        }
        case GraphPlant::FragmentedDyads: {
            const std::size_t dyads = a / 2;
            const std::size_t j = cycle_++ % dyads;
            return {2 * j, 2 * j + 1};
        }
        case GraphPlant::DenseCore:
        default: {
            const std::size_t core = std::clamp<std::size_t>(a / 10, 2, 50);
            if (a <= core || rng.chance(0.5)) {
                const std::size_t x = rng.index(core);
                std::size_t y = rng.index(core - 1);
                if (y >= x) ++y;
                return {x, y};
            }
            return {core + rng.index(a - core), rng.index(core)};
        }
        }
    }

    void organic(Orientation o, const OrientationPlant& plant, Rng& rng)
    {
        const auto prefix = kHandlePrefix[index_of(o)];
        const ZipfSampler zipf(plant.vocabulary, plant.zipf_exponent);
        cycle_ = 0;
        std::vector<std::size_t> local; // indices into out_ for retweet sources
        std::size_t produced = 0;
        while (produced < plant.messages) {
            const double u = rng.uniform();
            if (u < plant.conversation_share && plant.messages - produced >= 2) {
                const auto [from, to] = pick_pair(plant, rng);
                const auto source = handle(prefix, from);
                const auto target = handle(prefix, to);
                const std::int64_t t0 = std::int64_t(rng.index(std::size_t(span())));
                const std::vector<std::string> mention{target};
                auto& contact = emit(source, at(t0), text_for(o, plant, zipf, rng, mention));
                contact.mentions = mention;
                const std::string contact_id = contact.id;
                local.push_back(out_.size() - 1);
                ++produced;
                if (rng.chance(plant.response_rate)) {
                    const std::int64_t t1 = t0 + draw_lag(plant, rng);
                    if (t1 < span()) {
                        auto& reply = emit(target, at(t1), text_for(o, plant, zipf, rng, {}));
                        reply.reply_to = contact_id;
                        local.push_back(out_.size() - 1);
                        ++produced;
                    }
                }
                continue;
            }
            if (u < plant.conversation_share + plant.retweet_rate && !local.empty()) {
                const auto& original = out_[local[rng.index(local.size())]];
                const std::int64_t t1 = (original.created_at.time_since_epoch().count() - spec_.start_unix) +
                                        draw_lag(plant, rng);
                if (t1 < span()) {
                    const std::string original_id = original.id;
                    const std::string text = "RT " + original.text;
                    auto& rt = emit(handle(prefix, rng.index(plant.actors)), at(t1), text);
                    rt.retweet_of = original_id;
                    ++produced;
                    continue;
                }
            }
            const std::int64_t t = std::int64_t(rng.index(std::size_t(span())));
            emit(handle(prefix, rng.index(plant.actors)), at(t), text_for(o, plant, zipf, rng, {}));
            local.push_back(out_.size() - 1);
            ++produced;
        }
    }

    // Star days give a group betweenness centralization of exactly 1, dyad days exactly 0.
    void oscillation(Orientation o, const OrientationPlant& plant, Rng& rng)
    {
        const auto prefix = kHandlePrefix[index_of(o)];
        const ZipfSampler zipf(plant.vocabulary, plant.zipf_exponent);
        const std::size_t dyads = (plant.actors - 1) / 2;
        for (std::size_t d = 0; d < spec_.days; ++d) {
            const std::size_t today = plant.messages / spec_.days + (d < plant.messages % spec_.days ? 1 : 0);
            const bool high = oscillation_high(d, plant.oscillation_period_days);
            for (std::size_t k = 0; k < today; ++k) {
                std::size_t from, to;
                if (high) {
                    from = 1 + k % (plant.actors - 1);
                    to = 0;
                } else {
                    const std::size_t j = k % dyads;
                    from = 1 + 2 * j;
                    to = 2 + 2 * j;
                }
                const std::int64_t t = std::int64_t(d) * kDay + std::int64_t(rng.index(kDay));
                const std::vector<std::string> mention{handle(prefix, to)};
                auto& m = emit(handle(prefix, from), at(t), text_for(o, plant, zipf, rng, mention));
                m.mentions = mention;
            }
        }
    }

    void untagged()
    {
        if (spec_.untagged_messages == 0) return;
        Rng rng(splitmix(seed_ ^ 0xA5A5A5A5ull));
        const ZipfSampler zipf(5000, 1.0);
        for (std::size_t i = 0; i < spec_.untagged_messages; ++i) {
            std::vector<std::string> words;
            for (std::size_t k = 0; k < 12; ++k) words.push_back("w" + std::to_string(zipf.rank(rng)));
            if (rng.chance(0.4)) {
                words.emplace_back(rng.chance(0.6) ? kPositiveWords[rng.index(kPositiveWords.size())]
                                                   : kNegativeWords[rng.index(kNegativeWords.size())]);
            }
            const std::int64_t t = std::int64_t(rng.index(std::size_t(span())));
            emit(handle("user", rng.index(spec_.untagged_actors)), at(t), join(words));
        }
    }

    const SynthSpec& spec_;
    std::uint64_t seed_;
    std::vector<Message> out_;
    std::size_t counter_ = 0;
    std::size_t cycle_ = 0;
};

GraphPlant parse_shape(const std::string& s)
{
    if (s == "star") return GraphPlant::Star;
    if (s == "dense-core") return GraphPlant::DenseCore;
    if (s == "fragmented-dyads") return GraphPlant::FragmentedDyads;
    throw ConfigError("unknown graph plant '" + s + "'");
}

} // namespace

bool oscillation_high(std::size_t day, std::size_t period_days)
{
    return (day % period_days) < (period_days + 1) / 2;
}

std::size_t planted_extrema(std::size_t days, std::size_t period_days)
{
    if (period_days == 0 || days < 3) return 0;
    std::size_t transitions = 0;
    for (std::size_t d = 1; d < days; ++d) {
        if (oscillation_high(d, period_days) != oscillation_high(d - 1, period_days)) ++transitions;
    }
    return transitions == 0 ? 0 : transitions - 1;
}

SynthSpec SynthSpec::crawl_scale(std::size_t total_messages)
{
    // Canonical order: Customers, Employees, EconomicFinancialGrowth, Excellence, Citizenship, SocialResponsibility.
    constexpr std::array<double, kOrientationCount> activity_weight = {19153, 10957, 2812, 13437, 4239, 2604};
    constexpr std::array<double, kOrientationCount> actors = {12070, 8041, 2105, 7872, 3270, 1809};
    constexpr std::array<double, kOrientationCount> lag = {5.674, 3.402, 2.884, 4.136, 2.75, 4.009};
    constexpr std::array<std::size_t, kOrientationCount> vocab = {5000, 6500, 5200, 5000, 4000, 3500};
    constexpr std::array<GraphPlant, kOrientationCount> shape = {
        GraphPlant::DenseCore, GraphPlant::DenseCore, GraphPlant::Star,
        GraphPlant::DenseCore, GraphPlant::DenseCore, GraphPlant::Star,
    };

    SynthSpec spec;
    spec.days = 60;
    spec.untagged_messages = std::size_t(std::llround(0.3 * double(total_messages)));
    const double tagged = double(total_messages - spec.untagged_messages);
    const double weight_total = [&] {
        double t = 0;
        for (double w : activity_weight) t += w;
        return t;
    }();
    const double scale = double(total_messages) / 100000.0;
    spec.untagged_actors = std::max<std::size_t>(2, std::size_t(std::llround(8000 * scale)));
    std::size_t assigned = 0;
    for (std::size_t o = 0; o < kOrientationCount; ++o) {
        auto& p = spec.orientations[o];
        p.messages = o + 1 == kOrientationCount ? std::size_t(tagged) - assigned
                                                : std::size_t(std::llround(tagged * activity_weight[o] / weight_total));
        assigned += p.messages;
        p.actors = std::max<std::size_t>(3, std::size_t(std::llround(actors[o] * scale)));
        p.shape = shape[o];
        p.lag_hours = lag[o];
        p.vocabulary = vocab[o];
        p.conversation_share = 0.35;
        p.response_rate = 0.9;
        p.positive_bias = 0.85;
        p.polar_rate = 0.55;
        p.retweet_rate = 0.1;
        p.multi_tag_rate = 0.03;
    }
    return spec;
}

SynthSpec SynthSpec::from_json_text(std::string_view json_text)
{
    const json doc = json::parse(json_text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) throw ConfigError("synth spec is not a JSON object");
    SynthSpec spec;
    const auto count = [](const json& v, const std::string& key) {
        if (!v.is_number_unsigned()) throw ConfigError(key + " must be a non-negative integer");
        return v.get<std::size_t>();
    };
    const auto number = [](const json& v, const std::string& key) {
        if (!v.is_number()) throw ConfigError(key + " must be a number");
        return v.get<double>();
    };
    for (const auto& [key, value] : doc.items()) {
        if (key == "start") {
            const auto t = value.is_string() ? parse_rfc3339(value.get<std::string>()) : std::nullopt;
            if (!t) throw ConfigError("start must be an RFC 3339 timestamp");
            spec.start_unix = t->time_since_epoch().count();
        } else if (key == "days") {
            spec.days = count(value, key);
        } else if (key == "untagged_messages") {
            spec.untagged_messages = count(value, key);
        } else if (key == "untagged_actors") {
            spec.untagged_actors = count(value, key);
        } else if (key == "orientations") {
            if (!value.is_object()) throw ConfigError("orientations must be an object");
            for (const auto& [name, plant_json] : value.items()) {
                const auto o = parse_orientation(name);
                if (!o) throw ConfigError("unknown orientation '" + name + "' in synth spec");
                if (!plant_json.is_object()) throw ConfigError("plant for '" + name + "' must be an object");
                auto& p = spec.orientations[index_of(*o)];
                for (const auto& [k, v] : plant_json.items()) {
                    if (k == "actors") p.actors = count(v, k);
                    else if (k == "messages") p.messages = count(v, k);
                    else if (k == "shape") p.shape = parse_shape(v.is_string() ? v.get<std::string>() : "");
                    else if (k == "conversation_share") p.conversation_share = number(v, k);
                    else if (k == "response_rate") p.response_rate = number(v, k);
                    else if (k == "lag") {
                        const auto s = v.is_string() ? v.get<std::string>() : "";
                        if (s == "constant") p.lag = LagDistribution::Constant;
                        else if (s == "exponential") p.lag = LagDistribution::Exponential;
                        else throw ConfigError("lag must be \"constant\" or \"exponential\"");
                    }
                    else if (k == "lag_hours") p.lag_hours = number(v, k);
                    else if (k == "positive_bias") p.positive_bias = number(v, k);
                    else if (k == "polar_rate") p.polar_rate = number(v, k);
                    else if (k == "vocabulary") p.vocabulary = count(v, k);
                    else if (k == "zipf_exponent") p.zipf_exponent = number(v, k);
                    else if (k == "tokens_per_message") p.tokens_per_message = count(v, k);
                    else if (k == "retweet_rate") p.retweet_rate = number(v, k);
                    else if (k == "multi_tag_rate") p.multi_tag_rate = number(v, k);
                    else if (k == "oscillation_period_days") p.oscillation_period_days = count(v, k);
                    else throw ConfigError("unknown plant key '" + k + "'");
                }
            }
        } else {
            throw ConfigError("unknown synth spec key '" + key + "'");
        }
    }
    spec.validate();
    return spec;
}

void SynthSpec::validate() const
{
    if (days == 0) throw ConfigError("synth days must be positive");
    if (start_unix % kDay != 0) throw ConfigError("synth start must fall on a UTC midnight");
    if (untagged_messages > 0 && untagged_actors == 0) throw ConfigError("untagged messages need untagged actors");
    const auto unit = [](double x) { return x >= 0.0 && x <= 1.0; };
    for (auto o : kAllOrientations) {
        const auto& p = orientations[index_of(o)];
        const auto name = std::string(to_string(o));
        if (p.messages == 0) continue;
        if (p.actors < 2) throw ConfigError(name + ": a plant needs at least two actors");
        if (p.vocabulary == 0) throw ConfigError(name + ": vocabulary must be positive");
        if (!unit(p.conversation_share) || !unit(p.response_rate) || !unit(p.positive_bias) || !unit(p.polar_rate) ||
            !unit(p.retweet_rate) || !unit(p.multi_tag_rate) || p.conversation_share + p.retweet_rate > 1.0) {
            throw ConfigError(name + ": rates must lie in [0,1]");
        }
        if (!(p.lag_hours > 0.0)) throw ConfigError(name + ": lag_hours must be positive");
        if (!(p.zipf_exponent >= 0.0)) throw ConfigError(name + ": zipf_exponent must be non-negative");
        if (p.oscillation_period_days == 1) throw ConfigError(name + ": oscillation period must be at least 2 days");
        if (p.oscillation_period_days > 0) {
            if (p.actors < 5) throw ConfigError(name + ": an oscillation plant needs at least five actors");
            if (p.messages < 2 * days) throw ConfigError(name + ": an oscillation plant needs two messages per day");
        }
    }
}

std::vector<Message> generate_corpus(const SynthSpec& spec, std::uint64_t seed)
{
    spec.validate();
    return Generator(spec, seed).run();
}

void write_corpus(std::ostream& out, std::span<const Message> messages)
{
    for (const auto& m : messages) out << to_json_line(m) << '\n';
}

void shuffle_messages(std::vector<Message>& messages, std::uint64_t seed)
{
    Rng rng(splitmix(seed ^ 0x5EEDull));
    for (std::size_t i = messages.size(); i > 1; --i) std::swap(messages[i - 1], messages[rng.index(i)]);
}

} // namespace coreval
