#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace citerate {

// Day-precision date in the proleptic Gregorian calendar.
class Date {
public:
    constexpr Date() = default;
    Date(int year, int month, int day);  // throws std::invalid_argument

    // Accepts "YYYY-MM-DD" or "YYYY-MM" (day defaults to 01).
    static std::optional<Date> parse(std::string_view text);
    static Date from_day_number(std::int64_t days);  // days since 1970-01-01
    static Date today_utc();

    int year() const { return year_; }
    int month() const { return month_; }
    int day() const { return day_; }

    std::int64_t day_number() const;
    std::string to_string() const;  // "YYYY-MM-DD"

    Date add_days(std::int64_t n) const { return from_day_number(day_number() + n); }
    Date add_years(int n) const;  // Feb 29 clamps to Feb 28

    friend constexpr auto operator<=>(const Date&, const Date&) = default;

private:
    std::int16_t year_ = 1970;
    std::int8_t month_ = 1;
    std::int8_t day_ = 1;
};

bool is_valid_date(int year, int month, int day);

// Elapsed time in years, measured on anniversaries of `from`: whole
// anniversary years count exactly 1.0 each, the remainder is the elapsed
// fraction of the current anniversary year. Negative if `to` < `from`.
double years_between(const Date& from, const Date& to);

}  // namespace citerate
