#include "geoimpact/common/date.hpp"

#include <chrono>
#include <cstdio>

#include "geoimpact/common/errors.hpp"

namespace geoimpact {

namespace {

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return !s.empty();
}

}  // namespace

Date Date::parse(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-' ||
      !all_digits(text.substr(0, 4)) || !all_digits(text.substr(5, 2)) ||
      !all_digits(text.substr(8, 2))) {
    throw ParseError("invalid date '" + std::string(text) +
                     "', expected YYYY-MM-DD");
  }
  const int y = (text[0] - '0') * 1000 + (text[1] - '0') * 100 +
                (text[2] - '0') * 10 + (text[3] - '0');
  const unsigned m = static_cast<unsigned>((text[5] - '0') * 10 + (text[6] - '0'));
  const unsigned d = static_cast<unsigned>((text[8] - '0') * 10 + (text[9] - '0'));
  return from_ymd(y, m, d);
}

Date Date::from_ymd(int year, unsigned month, unsigned day) {
  const std::chrono::year_month_day ymd{std::chrono::year{year},
                                        std::chrono::month{month},
                                        std::chrono::day{day}};
  if (!ymd.ok()) {
    throw ParseError("invalid calendar date " + std::to_string(year) + "-" +
                     std::to_string(month) + "-" + std::to_string(day));
  }
  return Date(std::chrono::sys_days(ymd).time_since_epoch().count());
}

Date Date::from_epoch_seconds(std::int64_t seconds) {
  std::int64_t day = seconds / 86400;
  if (seconds < 0 && seconds % 86400 != 0) --day;
  return Date(day);
}

std::string Date::to_string() const {
  const std::chrono::sys_days sd{std::chrono::days{epoch_day_}};
  const std::chrono::year_month_day ymd{sd};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()));
  return buf;
}

}  // namespace geoimpact
