#include "coreval/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>

#include <json.hpp>

#include "builtin_data.hpp"
#include "coreval/errors.hpp"
#include "coreval/text.hpp"

namespace coreval {
namespace {

using nlohmann::json;

std::optional<std::string> optional_id(const json& record, const char* key, bool& ok)
{
    const auto it = record.find(key);
    if (it == record.end() || it->is_null()) return std::nullopt;
    if (!it->is_string() || it->get_ref<const std::string&>().empty()) {
        ok = false;
        return std::nullopt;
    }
    return it->get<std::string>();
}

// Returns nullopt for a malformed record.
std::optional<Message> to_message(const json& record)
{
    if (!record.is_object()) return std::nullopt;
    const auto string_field = [&](const char* key) -> const std::string* {
        const auto it = record.find(key);
        if (it == record.end() || !it->is_string()) return nullptr;
        return &it->get_ref<const std::string&>();
    };
    const auto* id = string_field("id");
    const auto* author = string_field("author");
    const auto* created = string_field("created_at");
    const auto* text = string_field("text");
    if (!id || !author || !created || !text || id->empty()) return std::nullopt;

    Message m;
    m.id = *id;
    m.author = normalize_handle(*author);
    if (m.author.empty()) return std::nullopt;
    const auto ts = parse_rfc3339(*created);
    if (!ts) return std::nullopt;
    m.created_at = *ts;
    m.text = *text;

    bool ok = true;
    m.reply_to = optional_id(record, "reply_to", ok);
    m.retweet_of = optional_id(record, "retweet_of", ok);
    if (!ok || m.reply_to == m.id || m.retweet_of == m.id) return std::nullopt;

    if (const auto it = record.find("mentions"); it != record.end() && !it->is_null()) {
        if (!it->is_array()) return std::nullopt;
        for (const auto& h : *it) {
            if (!h.is_string()) return std::nullopt;
            auto handle = normalize_handle(h.get_ref<const std::string&>());
            if (handle.empty()) return std::nullopt;
            m.mentions.push_back(std::move(handle));
        }
    }
    return m;
}

} // namespace

bool canonical_less(const Message& a, const Message& b)
{
    if (a.created_at != b.created_at) return a.created_at < b.created_at;
    return a.id < b.id;
}

std::string normalize_handle(std::string_view handle)
{
    while (!handle.empty() && (handle.front() == '@' || handle.front() == ' ')) handle.remove_prefix(1);
    while (!handle.empty() && handle.back() == ' ') handle.remove_suffix(1);
    return to_lower(handle);
}

ParsedCorpus parse_corpus(std::istream& in)
{
    ParsedCorpus out;
    std::set<std::string, std::less<>> seen;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const json record = json::parse(line, nullptr, /*allow_exceptions=*/false);
        if (record.is_discarded()) {
            ++out.skipped;
            continue;
        }
        auto message = to_message(record);
        if (!message) {
            ++out.skipped;
            continue;
        }
        if (!seen.insert(message->id).second) {
            throw InputError("duplicate message id '" + message->id + "'");
        }
        out.messages.push_back(std::move(*message));
    }
    return out;
}

ParsedCorpus load_corpus(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open corpus '" + path.string() + "'");
    return parse_corpus(in);
}

std::string to_json_line(const Message& m)
{
    json j;
    j["id"] = m.id;
    j["author"] = m.author;
    j["created_at"] = format_rfc3339(m.created_at);
    j["text"] = m.text;
    j["reply_to"] = m.reply_to ? json(*m.reply_to) : json(nullptr);
    j["retweet_of"] = m.retweet_of ? json(*m.retweet_of) : json(nullptr);
    j["mentions"] = m.mentions;
    return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

AuthorIndex::AuthorIndex(std::span<const Message> messages)
{
    authors_.reserve(messages.size());
    for (const auto& m : messages) authors_.emplace(m.id, m.author);
}

std::optional<std::string_view> AuthorIndex::author_of(std::string_view message_id) const
{
    const auto it = authors_.find(std::string(message_id));
    if (it == authors_.end()) return std::nullopt;
    return std::string_view(it->second);
}

OrientationLexicon::OrientationLexicon(const std::array<std::vector<std::string>, kOrientationCount>& phrases)
{
    for (auto o : kAllOrientations) {
        auto& target = phrases_[index_of(o)];
        std::set<Phrase> unique;
        for (const auto& raw : phrases[index_of(o)]) {
            auto tokens = tokenize(raw);
            if (tokens.empty()) {
                throw ConfigError("empty keyword phrase under " + std::string(to_string(o)));
            }
            if (tokens.size() > 5) {
                throw ConfigError("keyword phrase '" + raw + "' under " + std::string(to_string(o)) +
                                  " has more than five tokens");
            }
            if (!unique.insert(tokens).second) {
                throw ConfigError("duplicate keyword phrase '" + raw + "' under " + std::string(to_string(o)));
            }
            by_first_token_[tokens.front()].push_back({o, target.size()});
            target.push_back(std::move(tokens));
        }
    }
}

OrientationLexicon OrientationLexicon::from_json_text(std::string_view json_text)
{
    const json doc = json::parse(json_text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) throw ConfigError("orientation lexicon is not a JSON object");

    std::array<std::vector<std::string>, kOrientationCount> phrases;
    std::array<bool, kOrientationCount> present{};
    for (const auto& [key, value] : doc.items()) {
        const auto o = parse_orientation(key);
        if (!o) throw ConfigError("unknown orientation '" + key + "' in lexicon");
        if (!value.is_array()) throw ConfigError("lexicon entry '" + key + "' is not an array");
        for (const auto& p : value) {
            if (!p.is_string()) throw ConfigError("lexicon entry '" + key + "' contains a non-string");
            phrases[index_of(*o)].push_back(p.get<std::string>());
        }
        present[index_of(*o)] = true;
    }
    for (auto o : kAllOrientations) {
        if (!present[index_of(o)]) throw ConfigError("lexicon is missing orientation " + std::string(to_string(o)));
    }
    return OrientationLexicon(phrases);
}

OrientationLexicon OrientationLexicon::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open lexicon '" + path.string() + "'");
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return from_json_text(text);
}

const OrientationLexicon& OrientationLexicon::builtin()
{
    static const OrientationLexicon lexicon = from_json_text(builtin_data::kOrientationLexicon);
    return lexicon;
}

OrientationSet OrientationLexicon::match(std::span<const std::string> tokens) const
{
    OrientationSet found;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const auto it = by_first_token_.find(tokens[i]);
        if (it == by_first_token_.end()) continue;
        for (const auto& entry : it->second) {
            if (found.contains(entry.orientation)) continue;
            const auto& phrase = phrases_[index_of(entry.orientation)][entry.phrase];
            if (i + phrase.size() > tokens.size()) continue;
            if (std::equal(phrase.begin(), phrase.end(), tokens.begin() + std::ptrdiff_t(i))) {
                found.insert(entry.orientation);
            }
        }
    }
    return found;
}

OrientationSet tag_message(const Message& m, const OrientationLexicon& lexicon)
{
    const auto tokens = tokenize(m.text);
    return lexicon.match(tokens);
}

Partition filter_and_partition(std::span<const Message> messages, const OrientationLexicon& lexicon)
{
    Partition out;
    for (const auto& m : messages) {
        const auto tags = tag_message(m, lexicon);
        if (tags.empty()) {
            ++out.discarded;
            continue;
        }
        ++out.kept;
        for (auto o : kAllOrientations) {
            if (tags.contains(o)) out.by_orientation[index_of(o)].push_back({m, tags});
        }
    }
    for (auto& list : out.by_orientation) {
        std::sort(list.begin(), list.end(),
                  [](const TaggedMessage& a, const TaggedMessage& b) { return canonical_less(a.message, b.message); });
    }
    return out;
}

} // namespace coreval
