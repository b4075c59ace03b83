#include "coreval/language.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "builtin_data.hpp"
#include "coreval/errors.hpp"
#include "coreval/text.hpp"

namespace coreval {

using nlohmann::json;

LexiconSentimentScorer::LexiconSentimentScorer(const std::vector<std::string>& positive,
                                               const std::vector<std::string>& negative)
{
    const auto add = [](const std::string& term, std::unordered_set<std::string>& into) {
        const auto tokens = tokenize(term);
        if (tokens.size() != 1) throw ConfigError("polar term '" + term + "' is not a single token");
        into.insert(tokens.front());
    };
    for (const auto& t : positive) add(t, positive_);
    for (const auto& t : negative) add(t, negative_);
    for (const auto& t : positive_) {
        if (negative_.contains(t)) throw ConfigError("polar term '" + t + "' is both positive and negative");
    }
}

LexiconSentimentScorer LexiconSentimentScorer::from_json_text(std::string_view json_text)
{
    const json doc = json::parse(json_text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) throw ConfigError("polar lexicon is not a JSON object");
    const auto list = [&](const char* key) {
        const auto it = doc.find(key);
        if (it == doc.end() || !it->is_array()) {
            throw ConfigError(std::string("polar lexicon needs a '") + key + "' array");
        }
        std::vector<std::string> out;
        for (const auto& v : *it) {
            if (!v.is_string()) throw ConfigError(std::string("non-string entry in '") + key + "'");
            out.push_back(v.get<std::string>());
        }
        return out;
    };
    return LexiconSentimentScorer(list("positive"), list("negative"));
}

LexiconSentimentScorer LexiconSentimentScorer::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open polar lexicon '" + path.string() + "'");
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return from_json_text(text);
}

const LexiconSentimentScorer& LexiconSentimentScorer::builtin()
{
    static const LexiconSentimentScorer scorer = from_json_text(builtin_data::kPolarLexicon);
    return scorer;
}

double LexiconSentimentScorer::score(std::string_view text) const
{
    const auto tokens = tokenize(text);
    return score_tokens(tokens);
}

double LexiconSentimentScorer::score_tokens(std::span<const std::string> tokens) const
{
    std::size_t p = 0;
    std::size_t q = 0;
    for (const auto& t : tokens) {
        if (positive_.contains(t)) ++p;
        else if (negative_.contains(t)) ++q;
    }
    if (p + q == 0) return 0.5;
    // Algebraically equal to 0.5 + (p - q) / (2(p + q)).
    return double(p) / double(p + q);
}

LexiconSentimentScorer LexiconSentimentScorer::swapped() const
{
    LexiconSentimentScorer out;
    out.positive_ = negative_;
    out.negative_ = positive_;
    return out;
}

std::optional<double> emotionality(std::span<const double> sentiments)
{
    if (sentiments.empty()) return std::nullopt;
    double total = 0.0;
    for (const double s : sentiments) total += std::abs(s - 0.5);
    return total / double(sentiments.size());
}

std::optional<double> mean_sentiment(std::span<const double> sentiments)
{
    if (sentiments.empty()) return std::nullopt;
    double total = 0.0;
    for (const double s : sentiments) total += s;
    return total / double(sentiments.size());
}

ReferenceDictionary::ReferenceDictionary(std::unordered_map<std::string, double> probabilities, double unseen_mass)
    : probabilities_(std::move(probabilities)), unseen_mass_(unseen_mass)
{
    if (!(unseen_mass_ >= 0.0) || !std::isfinite(unseen_mass_)) {
        throw ConfigError("reference dictionary unseen mass must be a non-negative number");
    }
    for (const auto& [token, p] : probabilities_) {
        if (!(p > 0.0) || !std::isfinite(p)) {
            throw ConfigError("reference probability for '" + token + "' must be positive");
        }
    }
    if (total_mass() > 1.0 + 1e-9) throw ConfigError("reference dictionary probabilities sum above 1");
}

ReferenceDictionary ReferenceDictionary::from_counts(const std::unordered_map<std::string, std::size_t>& counts)
{
    std::size_t total = 0;
    for (const auto& [token, c] : counts) total += c;
    const double denominator = double(total) + double(counts.size()) + 1.0;
    std::unordered_map<std::string, double> probabilities;
    probabilities.reserve(counts.size());
    for (const auto& [token, c] : counts) probabilities.emplace(token, (double(c) + 1.0) / denominator);
    return ReferenceDictionary(std::move(probabilities), 1.0 / denominator);
}

ReferenceDictionary ReferenceDictionary::from_tokens(std::span<const std::string> tokens)
{
    ReferenceCounter counter;
    counter.add(tokens);
    return counter.build();
}

ReferenceDictionary ReferenceDictionary::load_counts(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open reference dictionary '" + path.string() + "'");
    const json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) throw ConfigError("reference dictionary is not a JSON object");
    std::unordered_map<std::string, std::size_t> counts;
    for (const auto& [token, value] : doc.items()) {
        if (!value.is_number_unsigned()) throw ConfigError("reference count for '" + token + "' is not a count");
        const auto tokens = tokenize(token);
        if (tokens.size() != 1) throw ConfigError("reference entry '" + token + "' is not a single token");
        counts[tokens.front()] += value.get<std::size_t>();
    }
    return from_counts(counts);
}

double ReferenceDictionary::probability(const std::string& token) const
{
    const auto it = probabilities_.find(token);
    return it == probabilities_.end() ? unseen_mass_ : it->second;
}

double ReferenceDictionary::total_mass() const
{
    double total = unseen_mass_;
    for (const auto& [token, p] : probabilities_) total += p;
    return total;
}

void ReferenceCounter::add(std::span<const std::string> tokens)
{
    for (const auto& t : tokens) ++counts_[t];
    total_ += tokens.size();
}

Surprisal surprisal(std::span<const std::string> tokens, const ReferenceDictionary& reference)
{
    Surprisal s;
    for (const auto& t : tokens) s.total_nats -= std::log(reference.probability(t));
    s.tokens = tokens.size();
    return s;
}

std::optional<double> complexity(std::span<const std::string> tokens, const ReferenceDictionary& reference)
{
    return surprisal(tokens, reference).mean();
}

} // namespace coreval
