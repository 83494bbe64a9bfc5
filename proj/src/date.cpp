#include "citerate/date.hpp"

#include <cstdio>
#include <ctime>
#include <stdexcept>

namespace citerate {

namespace {

bool is_leap(int y) {
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

int days_in_month(int y, int m) {
    static constexpr int lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return lengths[m - 1];
}

}  // namespace

bool is_valid_date(int year, int month, int day) {
    if (year < -9999 || year > 9999) return false;
    if (month < 1 || month > 12) return false;
    return day >= 1 && day <= days_in_month(year, month);
}

Date::Date(int year, int month, int day) {
    if (!is_valid_date(year, month, day))
        throw std::invalid_argument("invalid calendar date");
    year_ = static_cast<std::int16_t>(year);
    month_ = static_cast<std::int8_t>(month);
    day_ = static_cast<std::int8_t>(day);
}

std::optional<Date> Date::parse(std::string_view text) {
    auto digits = [&](std::size_t pos, std::size_t count, int& out) {
        out = 0;
        if (pos + count > text.size()) return false;
        for (std::size_t i = 0; i < count; ++i) {
            const char c = text[pos + i];
            if (c < '0' || c > '9') return false;
            out = out * 10 + (c - '0');
        }
        return true;
    };
    int y = 0, m = 0, d = 1;
    if (!digits(0, 4, y)) return std::nullopt;
    if (text.size() < 7 || text[4] != '-' || !digits(5, 2, m)) return std::nullopt;
    if (text.size() == 7) {
        d = 1;
    } else if (text.size() == 10 && text[7] == '-') {
        if (!digits(8, 2, d)) return std::nullopt;
    } else {
        return std::nullopt;
    }
    if (!is_valid_date(y, m, d)) return std::nullopt;
    return Date(y, m, d);
}

// Civil-calendar conversions after Howard Hinnant's chrono algorithms.
std::int64_t Date::day_number() const {
    int y = year_;
    const int m = month_, d = day_;
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u + static_cast<unsigned>(d) - 1u;
    const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

Date Date::from_day_number(std::int64_t days) {
    std::int64_t z = days + 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp < 10 ? mp + 3 : mp - 9;
    return Date(static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d));
}

Date Date::today_utc() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    return Date(tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday);
}

Date Date::add_years(int n) const {
    const int y = year_ + n;
    const int d = std::min<int>(day_, days_in_month(y, month_));
    return Date(y, month_, d);
}

std::string Date::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", static_cast<int>(year_),
                  static_cast<int>(month_), static_cast<int>(day_));
    return buf;
}

double years_between(const Date& from, const Date& to) {
    if (to < from) return -years_between(to, from);
    int whole = to.year() - from.year();
    if (whole > 0 && from.add_years(whole) > to) --whole;
    const Date lo = from.add_years(whole);
    const Date hi = from.add_years(whole + 1);
    const auto span = static_cast<double>(hi.day_number() - lo.day_number());
    return whole + static_cast<double>(to.day_number() - lo.day_number()) / span;
}

}  // namespace citerate
