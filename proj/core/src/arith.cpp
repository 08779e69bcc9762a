#include "sefib/arith.hpp"

#include <cctype>
#include <ostream>

#include "sefib/error.hpp"

namespace sefib {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw UsageError("malformed rational: '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw UsageError("malformed rational: '" + std::string(whole) + "'");
    }
  }
  return BigInt(std::string(digits), 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw MathError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  bool negative = false;
  // U+2212 MINUS SIGN in UTF-8.
  constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  if (text.starts_with(kUnicodeMinus)) {
    negative = true;
    text.remove_prefix(kUnicodeMinus.size());
  } else if (text.starts_with('-')) {
    negative = true;
    text.remove_prefix(1);
  } else if (text.starts_with('+')) {
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  BigInt num = parse_integer(trim(text.substr(0, slash)), whole);
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(trim(text.substr(slash + 1)), whole);
    if (den == 0) throw UsageError("zero denominator in '" + std::string(whole) + "'");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw MathError("inverse of zero");
  return Rational(den(), num());
}

Rational Rational::pow(unsigned long e) const {
  BigInt n;
  BigInt d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), e);
  // Powers of coprime integers stay coprime; no canonicalization needed.
  Rational r;
  r.value_ = mpq_class(n, d);
  return r;
}

BigInt Rational::height() const {
  BigInt n = ::abs(value_.get_num());
  const BigInt& d = value_.get_den();
  return n > d ? n : d;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw MathError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r;
  r.value_ = -a.value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

std::optional<BigInt> integer_nth_root(const BigInt& m, unsigned long s) {
  if (m < 0) throw UsageError("integer_nth_root of a negative integer");
  if (s < 2) throw UsageError("integer_nth_root requires s >= 2");
  BigInt t;
  if (mpz_root(t.get_mpz_t(), m.get_mpz_t(), s) == 0) return std::nullopt;
  return t;
}

std::optional<Rational> is_sth_power(const Rational& q, unsigned long s) {
  if (s < 2) throw UsageError("is_sth_power requires s >= 2");
  if (q.is_zero()) return Rational(0);
  const bool negative = q.sign() < 0;
  if (negative && s % 2 == 0) return std::nullopt;
  // Lowest terms: p/q is an s-th power iff both p and q are.
  const BigInt n = negative ? BigInt(-q.num()) : q.num();
  auto den_root = integer_nth_root(q.den(), s);
  if (!den_root) return std::nullopt;
  auto num_root = integer_nth_root(n, s);
  if (!num_root) return std::nullopt;
  if (negative) *num_root = -*num_root;
  return Rational(*num_root, *den_root);
}

BigInt pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace sefib

std::size_t std::hash<sefib::Rational>::operator()(const sefib::Rational& q) const noexcept {
  const std::size_t h1 = mpz_get_ui(q.raw().get_num_mpz_t()) ^ (mpz_sgn(q.raw().get_num_mpz_t()) < 0 ? 0x9e3779b97f4a7c15ULL : 0);
  const std::size_t h2 = mpz_get_ui(q.raw().get_den_mpz_t());
  return h1 ^ (h2 * 0x100000001b3ULL);
}
