#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace coreval {

using Timestamp = std::chrono::sys_seconds;

/// Parses an RFC 3339 timestamp ("2017-05-02T08:15:00Z", "...+02:00",
/// fractional seconds truncated) and converts it to UTC.
std::optional<Timestamp> parse_rfc3339(std::string_view text);

/// Formats as "YYYY-MM-DDTHH:MM:SSZ".
std::string format_rfc3339(Timestamp t);

} // namespace coreval
