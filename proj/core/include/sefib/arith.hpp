#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sefib {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& q);

  /// Parses "p/q", "p", with optional leading '-' (ASCII or U+2212) and surrounding whitespace.
  static Rational parse(std::string_view text);

  [[nodiscard]] BigInt num() const { return value_.get_num(); }
  [[nodiscard]] BigInt den() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

  [[nodiscard]] Rational abs() const;
  [[nodiscard]] Rational inverse() const;
  [[nodiscard]] Rational pow(unsigned long e) const;
  /// Height max(|p|, q) of p/q in lowest terms.
  [[nodiscard]] BigInt height() const;

  [[nodiscard]] std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

 private:
  mpq_class value_{0};
};

/// Returns t with t^s == m exactly, or nullopt. Never a floor approximation.
[[nodiscard]] std::optional<BigInt> integer_nth_root(const BigInt& m, unsigned long s);

/// Returns t with t^s == q over the rationals, or nullopt.
/// Even s: requires q >= 0 and yields the nonnegative root. Odd s: sign carries over.
[[nodiscard]] std::optional<Rational> is_sth_power(const Rational& q, unsigned long s);

[[nodiscard]] BigInt pow(const BigInt& base, unsigned long e);
[[nodiscard]] BigInt gcd(const BigInt& a, const BigInt& b);
[[nodiscard]] BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace sefib

template <>
struct std::hash<sefib::Rational> {
  std::size_t operator()(const sefib::Rational& q) const noexcept;
};
