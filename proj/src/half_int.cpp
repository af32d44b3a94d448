#include "micz/half_int.hpp"

#include <charconv>

namespace micz {

std::optional<HalfInt> parse_half_int(std::string_view text) {
  if (text.empty()) return std::nullopt;

  auto parse_i64 = [](std::string_view s) -> std::optional<std::int64_t> {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_i64(text.substr(0, slash));
    auto den = parse_i64(text.substr(slash + 1));
    if (!num || !den) return std::nullopt;
    if (*den == 2) return HalfInt{*num};
    if (*den == 1) return HalfInt{2 * *num};
    if (*den == -2) return HalfInt{-*num};
    if (*den == -1) return HalfInt{-2 * *num};
    return std::nullopt;
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    std::string_view whole = text.substr(0, dot);
    bool neg = !whole.empty() && whole.front() == '-';
    if (whole == "-" || whole.empty()) whole = "0";
    auto w = parse_i64(whole == "-" ? std::string_view("0") : whole);
    if (!w) return std::nullopt;
    std::int64_t tw = 2 * *w;
    if (frac == "5") {
      tw += (neg || *w < 0) ? -1 : 1;
    } else if (!frac.empty() && frac.find_first_not_of('0') != std::string_view::npos) {
      return std::nullopt;
    }
    return HalfInt{tw};
  }

  auto v = parse_i64(text);
  if (!v) return std::nullopt;
  return HalfInt{2 * *v};
}

std::string to_string(HalfInt h) {
  if (h.is_integer()) return std::to_string(h.twice / 2);
  return std::to_string(h.twice) + "/2";
}

}  // namespace micz
