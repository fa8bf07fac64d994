#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace geoimpact {

// FNV-1a, 64-bit (offset 14695981039346656037, prime 1099511628211).
// Used for content digests and document ids; these are integrity and
// dedup keys, not security boundaries.
class Fnv1a64 {
 public:
  Fnv1a64& update(std::string_view bytes) {
    for (unsigned char c : bytes) {
      hash_ ^= static_cast<std::uint64_t>(c);
      hash_ *= 0x100000001B3ULL;
    }
    return *this;
  }

  Fnv1a64& update_byte(unsigned char c) {
    hash_ ^= static_cast<std::uint64_t>(c);
    hash_ *= 0x100000001B3ULL;
    return *this;
  }

  std::uint64_t value() const { return hash_; }

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    std::uint64_t v = hash_;
    for (int i = 15; i >= 0; --i) {
      out[static_cast<std::size_t>(i)] = digits[v & 0xF];
      v >>= 4;
    }
    return out;
  }

 private:
  std::uint64_t hash_ = 0xCBF29CE484222325ULL;
};

inline std::string fnv1a_hex(std::string_view bytes) {
  return Fnv1a64().update(bytes).hex();
}

}  // namespace geoimpact
