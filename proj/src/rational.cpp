#include "folty/rational.hpp"

#include <charconv>
#include <numeric>

namespace folty {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ParameterError("rational with zero denominator");
  if (num < 0 || den < 0) throw ParameterError("negative rational");
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

namespace {

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || value < 0)
    throw ParameterError("invalid rational '" + std::string(whole) + "'");
  return value;
}

Rational parse_decimal(std::string_view text, std::string_view whole, std::int64_t extra_den) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_digits(text, whole), extra_den);
  std::string_view int_part = text.substr(0, dot);
  std::string_view frac_part = text.substr(dot + 1);
  if (frac_part.empty() && int_part.empty()) throw ParameterError("invalid rational '" + std::string(whole) + "'");
  if (frac_part.size() > 12) throw ParameterError("too many decimal places in '" + std::string(whole) + "'");
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  const std::int64_t ip = int_part.empty() ? 0 : parse_digits(int_part, whole);
  const std::int64_t fp = frac_part.empty() ? 0 : parse_digits(frac_part, whole);
  if (ip > (std::int64_t{1} << 40)) throw ParameterError("rational out of range '" + std::string(whole) + "'");
  return Rational(ip * scale + fp, scale * extra_den);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw ParameterError("empty rational");
  if (text.find_first_of("+-") != std::string_view::npos)
    throw ParameterError("invalid rational '" + std::string(whole) + "'");
  if (text.back() == '%') {
    text.remove_suffix(1);
    return parse_decimal(text, whole, 100);
  }
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_digits(text.substr(0, slash), whole),
                    parse_digits(text.substr(slash + 1), whole));
  }
  return parse_decimal(text, whole, 1);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

void require_threshold(const Rational& tau, std::string_view name) {
  if (!tau.is_valid_threshold()) {
    throw ParameterError(std::string(name) + " must be in (0, 1], got " + tau.to_string());
  }
}

}  // namespace folty
