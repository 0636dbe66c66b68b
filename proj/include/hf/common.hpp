#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hf {

// Calendar days are plain ints: days since 1970-01-01 (UTC). Day boundaries
// are UTC midnight everywhere in the pipeline.
using Day = int32_t;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Day make_day(int year, unsigned month, unsigned day) {
    using namespace std::chrono;
    year_month_day ymd{std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}};
    if (!ymd.ok()) throw DataError("invalid calendar date");
    return static_cast<Day>(sys_days{ymd}.time_since_epoch().count());
}

// "YYYY-MM-DD" -> Day. Returns nullopt on malformed or invalid dates.
std::optional<Day> parse_date(std::string_view s);

// RFC3339 UTC "YYYY-MM-DDTHH:MM:SSZ" -> (day, second-of-day).
struct Timestamp {
    Day day;
    int32_t sec;
};
std::optional<Timestamp> parse_rfc3339_utc(std::string_view s);

std::string day_to_string(Day d);

struct Ymd {
    int year;
    unsigned month;
    unsigned day;
};
Ymd day_to_ymd(Day d);

inline int year_of(Day d) { return day_to_ymd(d).year; }
int day_of_year(Day d);                   // 1-based
Day day_from_year_doy(int year, int doy); // doy 1-based
Day first_day_of_year(int year);
Day last_day_of_year(int year);

// ISO-8601 week date: Monday of week `week` of ISO year `iso_year`.
Day iso_week_monday(int iso_year, int week);
// "YYYY-Www" -> Monday of that week.
std::optional<Day> parse_iso_week(std::string_view s);

// FNV-1a, used for stable subscriber sharding and config fingerprints.
inline uint64_t fnv1a(std::string_view s, uint64_t h = 1469598103934665603ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline int shard_of(std::string_view subscriber, int shards) {
    return static_cast<int>(fnv1a(subscriber) % static_cast<uint64_t>(shards));
}

std::vector<std::string_view> split_view(std::string_view s, char sep);

// Inclusive day range covered by the study.
struct StudyRange {
    Day first = 0;
    Day last = 0;
    bool contains(Day d) const { return d >= first && d <= last; }
    int n_days() const { return static_cast<int>(last - first + 1); }
};

} // namespace hf
