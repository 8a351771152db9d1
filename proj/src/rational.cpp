#include "domset/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace domset {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::int64_t Rational::ceil() const {
  const std::int64_t q = num_ / den_;
  return (num_ % den_ > 0) ? q + 1 : q;
}

std::string Rational::to_decimal(int places) const {
  __int128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = num_ < 0;
  const __int128 mag = static_cast<__int128>(negative ? -num_ : num_) * scale;
  __int128 scaled = mag / den_;
  if (2 * (mag % den_) >= den_) ++scaled;

  const auto whole = static_cast<std::int64_t>(scaled / scale);
  auto frac = static_cast<std::int64_t>(scaled % scale);
  std::string out = (negative && scaled != 0 ? "-" : "") + std::to_string(whole);
  if (places > 0) {
    std::string digits = std::to_string(frac);
    out += "." + std::string(static_cast<std::size_t>(places) - digits.size(), '0') + digits;
  }
  return out;
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace domset
