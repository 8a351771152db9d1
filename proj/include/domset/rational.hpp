#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace domset {

/// Exact reduced fraction with positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  std::int64_t ceil() const;
  /// Rounded half away from zero to `places` decimals, e.g. "1.333333".
  std::string to_decimal(int places = 6) const;
  /// "p" or "p/q".
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace domset
