#include "hf/common.hpp"

#include <charconv>
#include <cstdio>

namespace hf {

namespace {

bool parse_int(std::string_view s, int& out) {
    if (s.empty()) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && p == s.data() + s.size();
}

} // namespace

std::optional<Day> parse_date(std::string_view s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    int y, m, d;
    if (!parse_int(s.substr(0, 4), y) || !parse_int(s.substr(5, 2), m) || !parse_int(s.substr(8, 2), d))
        return std::nullopt;
    using namespace std::chrono;
    year_month_day ymd{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                       std::chrono::day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) return std::nullopt;
    return static_cast<Day>(sys_days{ymd}.time_since_epoch().count());
}

std::optional<Timestamp> parse_rfc3339_utc(std::string_view s) {
    // strict YYYY-MM-DDTHH:MM:SSZ
    if (s.size() != 20 || s[10] != 'T' || s[13] != ':' || s[16] != ':' || s[19] != 'Z')
        return std::nullopt;
    auto day = parse_date(s.substr(0, 10));
    if (!day) return std::nullopt;
    int hh, mm, ss;
    if (!parse_int(s.substr(11, 2), hh) || !parse_int(s.substr(14, 2), mm) || !parse_int(s.substr(17, 2), ss))
        return std::nullopt;
    if (hh < 0 || hh > 23 || mm < 0 || mm > 59 || ss < 0 || ss > 60) return std::nullopt;
    return Timestamp{*day, hh * 3600 + mm * 60 + ss};
}

std::string day_to_string(Day d) {
    Ymd ymd = day_to_ymd(d);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", ymd.year, ymd.month, ymd.day);
    return buf;
}

Ymd day_to_ymd(Day d) {
    using namespace std::chrono;
    year_month_day ymd{sys_days{days{d}}};
    return Ymd{static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
               static_cast<unsigned>(ymd.day())};
}

int day_of_year(Day d) { return static_cast<int>(d - first_day_of_year(year_of(d)) + 1); }

Day day_from_year_doy(int year, int doy) { return first_day_of_year(year) + doy - 1; }

Day first_day_of_year(int year) { return make_day(year, 1, 1); }

Day last_day_of_year(int year) { return make_day(year, 12, 31); }

Day iso_week_monday(int iso_year, int week) {
    // Jan 4 is always in ISO week 1; ISO weeks start on Monday.
    Day jan4 = make_day(iso_year, 1, 4);
    int wd = static_cast<int>(((jan4 % 7) + 7 + 3) % 7); // 0=Mon (1970-01-01 was Thursday)
    Day week1_monday = jan4 - wd;
    return week1_monday + 7 * (week - 1);
}

std::optional<Day> parse_iso_week(std::string_view s) {
    // "YYYY-Www"
    if (s.size() != 8 || s[4] != '-' || s[5] != 'W') return std::nullopt;
    int y, w;
    if (!parse_int(s.substr(0, 4), y) || !parse_int(s.substr(6, 2), w)) return std::nullopt;
    if (w < 1 || w > 53) return std::nullopt;
    return iso_week_monday(y, w);
}

std::vector<std::string_view> split_view(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

} // namespace hf
