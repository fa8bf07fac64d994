#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace geoimpact {

// Calendar date stored as days since 1970-01-01 (UTC, proleptic Gregorian).
class Date {
 public:
  Date() = default;
  explicit Date(std::int64_t epoch_day) : epoch_day_(epoch_day) {}

  // Strict "YYYY-MM-DD"; rejects out-of-range calendar dates.
  static Date parse(std::string_view text);

  static Date from_ymd(int year, unsigned month, unsigned day);
  static Date from_epoch_seconds(std::int64_t seconds);

  std::int64_t epoch_day() const { return epoch_day_; }
  std::int64_t epoch_seconds() const { return epoch_day_ * 86400; }
  std::string to_string() const;  // "YYYY-MM-DD"

  Date operator+(std::int64_t days) const { return Date(epoch_day_ + days); }
  Date operator-(std::int64_t days) const { return Date(epoch_day_ - days); }
  std::int64_t operator-(const Date& other) const {
    return epoch_day_ - other.epoch_day_;
  }
  auto operator<=>(const Date&) const = default;

 private:
  std::int64_t epoch_day_ = 0;
};

// Inclusive date range.
struct DateRange {
  Date start;
  Date end;

  bool contains(Date d) const { return start <= d && d <= end; }
  bool contains_epoch_seconds(std::int64_t seconds) const {
    return start.epoch_seconds() <= seconds &&
           seconds < (end + 1).epoch_seconds();
  }
};

}  // namespace geoimpact
