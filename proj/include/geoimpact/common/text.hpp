#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace geoimpact {

std::string to_lower_ascii(std::string_view s);

// Lowercases and drops everything but ASCII letters and digits, so
// "Fort Lauderdale" and "fortlauderdale" normalize identically.
std::string normalize_place(std::string_view s);

std::string trim(std::string_view s);

std::vector<std::string> split(std::string_view s, char delim);

// Levenshtein distance with an early-exit cap; returns cap + 1 when the
// true distance exceeds the cap.
std::size_t edit_distance_capped(std::string_view a, std::string_view b,
                                 std::size_t cap);

// Case-insensitive whole-word phrase search: the match may not be flanked
// by ASCII alphanumerics ("storm" matches "The storm hit", not "restorm").
bool contains_word(std::string_view text, std::string_view phrase);

}  // namespace geoimpact
