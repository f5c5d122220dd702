#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "sepkit/errors.hpp"

namespace sepkit {

// Exact positive-or-zero rational. Thresholds such as 2k/eps are compared by
// cross-multiplication so decimal epsilons never round.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

  constexpr void normalize() {
    if (den == 0) throw InputError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  // Smallest integer >= this.
  std::int64_t ceil() const {
    if (num >= 0) return (num + den - 1) / den;
    return -((-num) / den);
  }

  std::int64_t floor() const {
    if (num >= 0) return num / den;
    return -((-num + den - 1) / den);
  }

  friend constexpr bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.num * b.den <= b.num * a.den; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  friend Rational operator*(const Rational& a, const Rational& b) { return {a.num * b.num, a.den * b.den}; }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw InputError("division by zero rational");
    return {a.num * b.den, a.den * b.num};
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }

  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
};

// Accepts "3", "0.25", "-1.5" and "1/3".
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational { throw InputError("not a rational number: '" + std::string(text) + "'"); };
  if (text.empty()) return fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational a = parse_rational(text.substr(0, slash));
    const Rational b = parse_rational(text.substr(slash + 1));
    if (b.num == 0) return fail();
    return a / b;
  }
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  std::int64_t num = 0, den = 1;
  bool seen_digit = false, seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.') {
      if (seen_point) return fail();
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') return fail();
    seen_digit = true;
    if (num > (INT64_MAX / 10) - 10 || (seen_point && den > INT64_MAX / 10)) {
      throw InputError("rational out of range: '" + std::string(text) + "'");
    }
    num = num * 10 + (c - '0');
    if (seen_point) den *= 10;
  }
  if (!seen_digit) return fail();
  return {negative ? -num : num, den};
}

}  // namespace sepkit
