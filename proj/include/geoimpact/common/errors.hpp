#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geoimpact {

// Base class for all structured pipeline errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input data. Carries the 1-based line/row and the column name
// when they are known, so callers can point at the offending cell.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg, std::size_t line = 0,
                      std::string column = {})
      : Error(decorate(msg, line, column)),
        line_(line),
        column_(std::move(column)) {}

  std::size_t line() const { return line_; }
  const std::string& column() const { return column_; }

 private:
  static std::string decorate(const std::string& msg, std::size_t line,
                              const std::string& column) {
    std::string out = msg;
    if (line > 0) out += " (line " + std::to_string(line) + ")";
    if (!column.empty()) out += " (column '" + column + "')";
    return out;
  }

  std::size_t line_;
  std::string column_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Stored data disagrees with its manifest or digest.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// Raster grids that must share geometry do not.
class GeometryError : public Error {
 public:
  using Error::Error;
};

// Remote fetch failed after the retry budget was exhausted.
class FetchError : public Error {
 public:
  using Error::Error;
};

}  // namespace geoimpact
