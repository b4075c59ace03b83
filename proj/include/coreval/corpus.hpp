#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "coreval/orientation.hpp"
#include "coreval/timeutil.hpp"

namespace coreval {

/// One social post.
struct Message {
    std::string id;
    std::string author; // lowercase handle, no '@'
    Timestamp created_at{};
    std::string text;
    std::optional<std::string> reply_to;
    std::optional<std::string> retweet_of;
    std::vector<std::string> mentions; // lowercase handles, input order

    friend bool operator==(const Message&, const Message&) = default;
};

/// Canonical ordering: (created_at, id).
bool canonical_less(const Message& a, const Message& b);

struct ParsedCorpus {
    std::vector<Message> messages;
    std::size_t skipped = 0;
};

/// Reads newline-delimited JSON records. Malformed records are skipped and
/// counted; blank lines are ignored. A duplicate id throws InputError.
ParsedCorpus parse_corpus(std::istream& in);

/// Throws InputError when the file cannot be opened.
ParsedCorpus load_corpus(const std::filesystem::path& path);

/// Serializes one message as a single NDJSON line (no trailing newline).
std::string to_json_line(const Message& m);

/// Normalizes an actor handle: lowercase, leading '@' removed.
std::string normalize_handle(std::string_view handle);

/// Message id -> author lookup, used to resolve reply and retweet targets.
class AuthorIndex {
public:
    AuthorIndex() = default;
    explicit AuthorIndex(std::span<const Message> messages);

    std::optional<std::string_view> author_of(std::string_view message_id) const;
    std::size_t size() const { return authors_.size(); }

private:
    std::unordered_map<std::string, std::string> authors_;
};

/// Keyword phrases for each orientation, stored as token sequences.
class OrientationLexicon {
public:
    using Phrase = std::vector<std::string>;

    /// Throws ConfigError on an empty phrase, a phrase longer than five tokens,
    /// or a duplicate phrase within one orientation.
    explicit OrientationLexicon(const std::array<std::vector<std::string>, kOrientationCount>& phrases);

    /// JSON object with exactly the six orientation names as keys, each an array of phrases.
    static OrientationLexicon from_json_text(std::string_view json_text);
    static OrientationLexicon load(const std::filesystem::path& path);

    /// Built-in keyword set seeded from typical corporate value statements.
    static const OrientationLexicon& builtin();

    std::span<const Phrase> phrases(Orientation o) const { return phrases_[index_of(o)]; }

    /// Orientations whose phrases occur as contiguous token runs in `tokens`.
    OrientationSet match(std::span<const std::string> tokens) const;

private:
    struct Entry {
        Orientation orientation;
        std::size_t phrase;
    };

    std::array<std::vector<Phrase>, kOrientationCount> phrases_;
    std::unordered_map<std::string, std::vector<Entry>> by_first_token_;
};

OrientationSet tag_message(const Message& m, const OrientationLexicon& lexicon);

struct TaggedMessage {
    Message message;
    OrientationSet orientations;
};

struct Partition {
    std::array<std::vector<TaggedMessage>, kOrientationCount> by_orientation;
    std::size_t kept = 0;      // distinct messages with at least one orientation
    std::size_t discarded = 0; // messages matching no orientation

    const std::vector<TaggedMessage>& operator[](Orientation o) const { return by_orientation[index_of(o)]; }
};

/// Tags every message and places it under each orientation it matches.
/// Lists are sorted canonically, so the result does not depend on input order.
Partition filter_and_partition(std::span<const Message> messages, const OrientationLexicon& lexicon);

} // namespace coreval
