#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>

namespace micz {

// Exact half-integer, stored as twice its value so that s, m, j, n are
// represented without rounding.
struct HalfInt {
  std::int64_t twice = 0;

  constexpr HalfInt() = default;
  constexpr explicit HalfInt(std::int64_t two_times) : twice(two_times) {}

  static constexpr HalfInt from_int(std::int64_t v) { return HalfInt{2 * v}; }
  static constexpr HalfInt half() { return HalfInt{1}; }

  constexpr bool is_integer() const { return twice % 2 == 0; }
  // Lossless for |twice| < 2^52.
  constexpr double value() const { return 0.5 * static_cast<double>(twice); }
  // Requires is_integer().
  constexpr std::int64_t as_int() const { return twice / 2; }

  constexpr HalfInt abs() const { return HalfInt{twice < 0 ? -twice : twice}; }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.twice + b.twice}; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt{a.twice - b.twice}; }
  friend constexpr HalfInt operator-(HalfInt a) { return HalfInt{-a.twice}; }
  friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) { return HalfInt{k * a.twice}; }
  friend constexpr bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) { return a.twice <=> b.twice; }

  HalfInt& operator+=(HalfInt b) { twice += b.twice; return *this; }
  HalfInt& operator-=(HalfInt b) { twice -= b.twice; return *this; }
};

// Accepts "3/2", "-1/2", "0.5", "-2.5", "2". Anything that is not an exact
// half-integer is rejected.
std::optional<HalfInt> parse_half_int(std::string_view text);

// "3/2", "-1/2", "2", ...
std::string to_string(HalfInt h);

}  // namespace micz
