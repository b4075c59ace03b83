#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace coreval {

/// Splits UTF-8 text into lowercase word tokens.
///
/// Separators are ASCII non-alphanumerics, the Latin-1 punctuation block, general
/// punctuation and symbol blocks, and emoji. Every other code point is a word
/// character. ASCII and Latin-1 letters are lowercased; other scripts pass
/// through unchanged. Hashtags and handles lose their sigil ("#Team" -> "team").
/// Malformed UTF-8 bytes act as separators.
std::vector<std::string> tokenize(std::string_view text);

/// Lowercases ASCII and Latin-1 letters in a UTF-8 string.
std::string to_lower(std::string_view text);

} // namespace coreval
