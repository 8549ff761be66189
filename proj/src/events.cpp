#include "radscale/events.hpp"

#include <charconv>
#include <cstdio>

namespace radscale {

namespace {

bool readInt(std::string_view text, std::size_t pos, std::size_t len, int& value) {
  if (pos + len > text.size()) return false;
  for (std::size_t i = pos; i < pos + len; ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  std::from_chars(text.data() + pos, text.data() + pos + len, value);
  return true;
}

}  // namespace

std::optional<Timestamp> parseTimestamp(std::string_view text) {
  using namespace std::chrono;
  int y = 0, mo = 0, d = 0;
  if (!readInt(text, 0, 4, y) || text.size() < 10 || text[4] != '-' || !readInt(text, 5, 2, mo) ||
      text[7] != '-' || !readInt(text, 8, 2, d)) {
    return std::nullopt;
  }
  const year_month_day date{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
  if (!date.ok()) return std::nullopt;
  Timestamp t = time_point_cast<milliseconds>(sys_days{date});
  if (text.size() == 10) return t;

  int hh = 0, mm = 0, ss = 0;
  if (text.size() < 20 || (text[10] != 'T' && text[10] != 't' && text[10] != ' ') || !readInt(text, 11, 2, hh) ||
      text[13] != ':' || !readInt(text, 14, 2, mm) || text[16] != ':' || !readInt(text, 17, 2, ss)) {
    return std::nullopt;
  }
  // Leap seconds (ss == 60) are not representable and are rejected.
  if (hh > 23 || mm > 59 || ss > 59) return std::nullopt;
  t += hours{hh} + minutes{mm} + seconds{ss};

  std::size_t pos = 19;
  if (text[pos] == '.') {
    ++pos;
    const std::size_t fracStart = pos;
    int millis = 0;
    int scale = 100;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      millis += (text[pos] - '0') * scale;
      scale /= 10;
      ++pos;
    }
    if (pos == fracStart) return std::nullopt;
    t += milliseconds{millis};
  }
  if (pos >= text.size()) return std::nullopt;
  if ((text[pos] == 'Z' || text[pos] == 'z') && pos + 1 == text.size()) return t;
  if (text[pos] != '+' && text[pos] != '-') return std::nullopt;
  int offH = 0, offM = 0;
  if (pos + 6 != text.size() || !readInt(text, pos + 1, 2, offH) || text[pos + 3] != ':' ||
      !readInt(text, pos + 4, 2, offM) || offH > 23 || offM > 59) {
    return std::nullopt;
  }
  const minutes offset{offH * 60 + offM};
  return text[pos] == '+' ? t - offset : t + offset;
}

std::string formatTimestamp(Timestamp t) {
  using namespace std::chrono;
  const auto day = floor<days>(t);
  const year_month_day date{day};
  const hh_mm_ss<milliseconds> time{t - day};
  char buf[40];
  const int ms = static_cast<int>(time.subseconds().count());
  if (ms == 0) {
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ", static_cast<int>(date.year()),
                  static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()),
                  static_cast<int>(time.hours().count()), static_cast<int>(time.minutes().count()),
                  static_cast<int>(time.seconds().count()));
  } else {
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d.%03dZ", static_cast<int>(date.year()),
                  static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()),
                  static_cast<int>(time.hours().count()), static_cast<int>(time.minutes().count()),
                  static_cast<int>(time.seconds().count()), ms);
  }
  return buf;
}

std::string_view toString(EventKind kind) noexcept {
  switch (kind) {
    case EventKind::Retweet: return "retweet";
    case EventKind::Reply: return "reply";
    case EventKind::Mention: return "mention";
    case EventKind::Other: return "other";
  }
  return "other";
}

EventKind parseEventKind(std::string_view name) noexcept {
  if (name == "retweet") return EventKind::Retweet;
  if (name == "reply") return EventKind::Reply;
  if (name == "mention") return EventKind::Mention;
  return EventKind::Other;
}

}  // namespace radscale
