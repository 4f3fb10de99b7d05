#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace folty {

/// Invalid threshold or other query parameter.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Non-negative rational num/den in lowest terms, den > 0. Threshold decisions use only
/// integer cross-multiplication.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den);

  /// Accepts "0.25", "25%", "12.5%", "1/4" and plain integers.
  static Rational parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  /// count >= this * size, exactly.
  bool met_by(std::uint64_t count, std::uint64_t size) const noexcept {
    return static_cast<unsigned __int128>(count) * static_cast<unsigned __int128>(den_) >=
           static_cast<unsigned __int128>(num_) * static_cast<unsigned __int128>(size);
  }

  /// Within (0, 1].
  bool is_valid_threshold() const noexcept { return num_ > 0 && num_ <= den_; }

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  /// "p/q", or "p" when q == 1.
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) noexcept {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) noexcept { return !(b < a); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Throws ParameterError unless tau is in (0, 1].
void require_threshold(const Rational& tau, std::string_view name);

}  // namespace folty
