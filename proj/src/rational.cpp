#include "lieconf/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

namespace lieconf {

namespace {

using wide = __int128;

std::int64_t narrow(wide v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw std::overflow_error("Rational: int64 overflow");
  }
  return static_cast<std::int64_t>(v);
}

wide gcd_wide(wide a, wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Normalizes n/d (d != 0) and narrows to int64.
void assign(std::int64_t& num, std::int64_t& den, wide n, wide d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    num = 0;
    den = 1;
    return;
  }
  wide g = gcd_wide(n, d);
  num = narrow(n / g);
  den = narrow(d / g);
}

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  assign(num_, den_, n, d);
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    assign(num_, den_, wide(num_) + o.num_, den_);
  } else {
    assign(num_, den_, wide(num_) * o.den_ + wide(o.num_) * den_,
           wide(den_) * o.den_);
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (num_ == 0 || o.num_ == 0) {
    num_ = 0;
    den_ = 1;
    return *this;
  }
  assign(num_, den_, wide(num_) * o.num_, wide(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  assign(num_, den_, wide(num_) * o.den_, wide(den_) * o.num_);
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-wide(num_));
  r.den_ = den_;
  return r;
}

bool operator<(const Rational& a, const Rational& b) {
  return wide(a.num_) * b.den_ < wide(b.num_) * a.den_;
}

Rational Rational::inverse() const { return Rational(1) / *this; }

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw std::invalid_argument("malformed rational: '" +
                                  std::string(text) + "'");
    }
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  auto d = parse_int(text.substr(slash + 1));
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                "'");
  }
  return Rational(parse_int(text.substr(0, slash)), d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

} // namespace lieconf
