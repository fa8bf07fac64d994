#include "geoimpact/common/text.hpp"

#include <algorithm>
#include <cctype>

namespace geoimpact {

namespace {

char lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

bool is_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9');
}

}  // namespace

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), lower);
  return out;
}

std::string normalize_place(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (is_alnum(c)) out.push_back(lower(c));
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char delim) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == delim) {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::size_t edit_distance_capped(std::string_view a, std::string_view b,
                                 std::size_t cap) {
  if (a.size() > b.size()) std::swap(a, b);
  if (b.size() - a.size() > cap) return cap + 1;

  std::vector<std::size_t> prev(a.size() + 1);
  std::vector<std::size_t> curr(a.size() + 1);
  for (std::size_t j = 0; j <= a.size(); ++j) prev[j] = j;

  for (std::size_t i = 1; i <= b.size(); ++i) {
    curr[0] = i;
    std::size_t row_min = curr[0];
    for (std::size_t j = 1; j <= a.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[j - 1] == b[i - 1] ? 0 : 1);
      curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, sub});
      row_min = std::min(row_min, curr[j]);
    }
    if (row_min > cap) return cap + 1;
    std::swap(prev, curr);
  }
  return std::min(prev[a.size()], cap + 1);
}

bool contains_word(std::string_view text, std::string_view phrase) {
  if (phrase.empty() || phrase.size() > text.size()) return false;
  const std::string hay = to_lower_ascii(text);
  const std::string needle = to_lower_ascii(phrase);
  std::size_t pos = 0;
  while ((pos = hay.find(needle, pos)) != std::string::npos) {
    const bool left_ok = pos == 0 || !is_alnum_public(hay[pos - 1]);
    const std::size_t end = pos + needle.size();
    const bool right_ok = end == hay.size() || !is_alnum_public(hay[end]);
    if (left_ok && right_ok) return true;
    ++pos;
  }
  return false;
}

}  // namespace geoimpact
