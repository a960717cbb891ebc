#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ellipsoidal {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Serializes as "p/q", or "p" when the denominator is 1.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  explicit Rational(const BigInt& integer) : value_(integer) {}
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Parses "p", "-p" or "p/q". Throws InvalidInput on anything else,
  /// including a zero denominator.
  static Rational parse(std::string_view text);

  [[nodiscard]] std::string str() const;
  [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
  [[nodiscard]] BigInt denominator() const { return value_.get_den(); }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] double to_double() const { return value_.get_d(); }
  [[nodiscard]] Rational inverse() const;
  [[nodiscard]] Rational abs() const;
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& r);

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// A rational plus a first-order coefficient of a formal infinitesimal
/// eps > 0. Ordered lexicographically on (main, eps); eps^2 terms are dropped.
struct DualRational {
  Rational main;
  Rational eps;

  friend DualRational operator+(const DualRational& x, const DualRational& y) {
    return {x.main + y.main, x.eps + y.eps};
  }
  friend DualRational operator-(const DualRational& x, const DualRational& y) {
    return {x.main - y.main, x.eps - y.eps};
  }
  friend DualRational operator*(const Rational& c, const DualRational& x) {
    return {c * x.main, c * x.eps};
  }
  friend DualRational operator*(const DualRational& x, const DualRational& y) {
    return {x.main * y.main, x.main * y.eps + x.eps * y.main};
  }
  friend bool operator==(const DualRational&, const DualRational&) = default;
  friend std::strong_ordering operator<=>(const DualRational& x, const DualRational& y) {
    if (auto c = x.main <=> y.main; c != 0) return c;
    return x.eps <=> y.eps;
  }
};

std::ostream& operator<<(std::ostream& os, const DualRational& d);

/// n! as an exact integer.
BigInt factorial(unsigned long n);

}  // namespace ellipsoidal
