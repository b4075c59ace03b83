#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace coreval {

/// Maps a message text to a sentiment in [0,1]; 0.5 is neutral, lower is negative.
class SentimentScorer {
public:
    virtual ~SentimentScorer() = default;
    virtual double score(std::string_view text) const = 0;
};

/// Counts positive (p) and negative (q) lexicon tokens; the score is
/// 0.5 + (p - q) / (2(p + q)), or 0.5 when no polar token occurs.
class LexiconSentimentScorer final : public SentimentScorer {
public:
    /// Each term must be a single token and may not appear in both lists.
    LexiconSentimentScorer(const std::vector<std::string>& positive, const std::vector<std::string>& negative);

    /// JSON object {"positive": [...], "negative": [...]}.
    static LexiconSentimentScorer from_json_text(std::string_view json_text);
    static LexiconSentimentScorer load(const std::filesystem::path& path);
    static const LexiconSentimentScorer& builtin();

    double score(std::string_view text) const override;
    double score_tokens(std::span<const std::string> tokens) const;

    /// Same lexicon with the polarities exchanged.
    LexiconSentimentScorer swapped() const;

private:
    LexiconSentimentScorer() = default;

    std::unordered_set<std::string> positive_;
    std::unordered_set<std::string> negative_;
};

/// Mean |s - 0.5|, in [0, 0.5]. Absent for an empty input.
std::optional<double> emotionality(std::span<const double> sentiments);

/// Unweighted mean. Absent for an empty input.
std::optional<double> mean_sentiment(std::span<const double> sentiments);

/// Unigram probabilities against which token surprisal is measured.
class ReferenceDictionary {
public:
    /// Throws ConfigError unless every probability is positive and finite, the
    /// unseen mass is non-negative, and the total mass is at most 1 + 1e-9.
    ReferenceDictionary(std::unordered_map<std::string, double> probabilities, double unseen_mass);

    /// Add-one smoothing: p(w) = (c(w) + 1) / (N + V + 1), unseen mass 1 / (N + V + 1).
    static ReferenceDictionary from_counts(const std::unordered_map<std::string, std::size_t>& counts);
    static ReferenceDictionary from_tokens(std::span<const std::string> tokens);

    /// JSON object token -> count, smoothed as in from_counts.
    static ReferenceDictionary load_counts(const std::filesystem::path& path);

    /// Vocabulary probability, or the unseen mass for out-of-vocabulary tokens.
    double probability(const std::string& token) const;
    double unseen_mass() const { return unseen_mass_; }
    std::size_t vocabulary_size() const { return probabilities_.size(); }
    double total_mass() const;

private:
    std::unordered_map<std::string, double> probabilities_;
    double unseen_mass_ = 0.0;
};

/// Streaming token counter feeding ReferenceDictionary::from_counts.
class ReferenceCounter {
public:
    void add(std::span<const std::string> tokens);
    ReferenceDictionary build() const { return ReferenceDictionary::from_counts(counts_); }
    std::size_t token_count() const { return total_; }

private:
    std::unordered_map<std::string, std::size_t> counts_;
    std::size_t total_ = 0;
};

/// Sum of -ln p(token) over a token run, kept with its length so runs can be pooled.
struct Surprisal {
    double total_nats = 0.0;
    std::size_t tokens = 0;

    Surprisal& operator+=(const Surprisal& other)
    {
        total_nats += other.total_nats;
        tokens += other.tokens;
        return *this;
    }
    std::optional<double> mean() const
    {
        if (tokens == 0) return std::nullopt;
        return total_nats / double(tokens);
    }
};

Surprisal surprisal(std::span<const std::string> tokens, const ReferenceDictionary& reference);

/// Mean token surprisal in nats. Absent for an empty token list.
std::optional<double> complexity(std::span<const std::string> tokens, const ReferenceDictionary& reference);

} // namespace coreval
