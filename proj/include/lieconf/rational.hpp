#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lieconf {

/// Exact rational number with a normalized int64 numerator/denominator.
///
/// Every intermediate product is formed in 128-bit arithmetic; a result that
/// does not fit back into int64 raises std::overflow_error instead of
/// silently wrapping. All quantities handled by this library (root
/// coordinates, structure constants, form coefficients) stay far below the
/// limit.
class Rational {
public:
  constexpr Rational() noexcept = default;
  constexpr Rational(std::int64_t n) noexcept : num_(n) {} // NOLINT(implicit)
  Rational(std::int64_t n, std::int64_t d);

  [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }

  [[nodiscard]] constexpr bool is_zero() const noexcept { return num_ == 0; }
  [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }
  [[nodiscard]] constexpr int sign() const noexcept {
    return (num_ > 0) - (num_ < 0);
  }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend constexpr bool operator==(const Rational& a,
                                   const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  [[nodiscard]] Rational abs() const { return sign() < 0 ? -*this : *this; }
  [[nodiscard]] Rational inverse() const;

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const;

  /// Accepts "p", "p/q", with optional leading sign. Throws
  /// std::invalid_argument on malformed input.
  static Rational parse(std::string_view text);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace lieconf

template <> struct std::hash<lieconf::Rational> {
  std::size_t operator()(const lieconf::Rational& r) const noexcept {
    auto h = std::hash<std::int64_t>{}(r.num());
    return h ^ (std::hash<std::int64_t>{}(r.den()) + 0x9e3779b97f4a7c15ULL +
                (h << 6) + (h >> 2));
  }
};
