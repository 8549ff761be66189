#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace radscale {

using Timestamp = std::chrono::sys_time<std::chrono::milliseconds>;

// Parses RFC 3339 ("2022-09-19T12:00:00Z", "...T12:00:00.250-03:00") or a bare
// date "2022-09-19" (midnight UTC). Returns nullopt on any syntax or range error.
std::optional<Timestamp> parseTimestamp(std::string_view text);

// Canonical UTC rendering: "YYYY-MM-DDTHH:MM:SSZ", with ".mmm" when the
// milliseconds are non-zero.
std::string formatTimestamp(Timestamp t);

enum class EventKind { Retweet, Reply, Mention, Other };

std::string_view toString(EventKind kind) noexcept;
// Unrecognised names map to Other.
EventKind parseEventKind(std::string_view name) noexcept;

// One logged interaction or post. Interactions have source and target;
// documents have author (or source) and text. A retweet can be both.
struct Event {
  std::string source;
  std::string target;
  std::string author;
  std::optional<std::string> text;
  Timestamp timestamp{};
  EventKind kind = EventKind::Other;

  bool isInteraction() const noexcept { return !source.empty() && !target.empty(); }
  // Whoever wrote or shared the text.
  const std::string& speaker() const noexcept { return author.empty() ? source : author; }
};

using EventLog = std::vector<Event>;

}  // namespace radscale

namespace radscale {

// Half-open time window [start, end).
struct WindowSpec {
  std::string label;
  Timestamp start{};
  Timestamp end{};

  bool contains(Timestamp t) const noexcept { return start <= t && t < end; }
};

}  // namespace radscale
