#include "folty/duration.hpp"

#include <array>
#include <charconv>
#include <limits>
#include <utility>

#include "folty/rational.hpp"

namespace folty {

namespace {

constexpr std::array<std::pair<char, Duration>, 5> kUnits{{
    {'w', 604800}, {'d', 86400}, {'h', 3600}, {'m', 60}, {'s', 1}}};

}  // namespace

Duration parse_duration(std::string_view text) {
  const std::string whole(text);
  if (text.empty()) throw ParameterError("empty duration");
  Duration scale = 1;
  for (const auto& [suffix, seconds] : kUnits) {
    if (text.back() == suffix) {
      scale = seconds;
      text.remove_suffix(1);
      break;
    }
  }
  Duration value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw ParameterError("invalid duration '" + whole + "'");
  if (value < 0) throw ParameterError("negative duration '" + whole + "'");
  if (value > std::numeric_limits<Duration>::max() / scale)
    throw ParameterError("duration out of range '" + whole + "'");
  return value * scale;
}

std::string format_duration(Duration seconds) {
  if (seconds == 0) return "0";
  for (const auto& [suffix, unit] : kUnits) {
    if (seconds % unit == 0) return std::to_string(seconds / unit) + suffix;
  }
  return std::to_string(seconds);
}

}  // namespace folty
