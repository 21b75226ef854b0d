#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pentile {

// Exact fraction with small operands. Used for angle coefficients (multiples
// of pi and pi/f), vertex-sum bookkeeping and the linear angle systems, where
// every quantity stays within a few digits.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rational operator+(Rational a, Rational b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(Rational a, Rational b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(Rational a, Rational b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(Rational a, Rational b) {
    if (b.num == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }
  Rational operator-() const { return Rational(-num, den); }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }

  bool is_zero() const { return num == 0; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  }
};

}  // namespace pentile
