#pragma once

#include <span>
#include <vector>

#include "sefib/arith.hpp"

namespace sefib {

[[nodiscard]] unsigned long euler_phi(unsigned long d);

/// Coefficients of the d-th cyclotomic polynomial, constant term first (monic, degree phi(d)).
[[nodiscard]] const std::vector<BigInt>& cyclotomic_polynomial(unsigned long d);

/// Element of Q(zeta_d) in the power basis 1, zeta, ..., zeta^{phi(d)-1}.
class CyclotomicElement {
 public:
  /// Zero of Q(zeta_order).
  explicit CyclotomicElement(unsigned long order);
  /// Coefficient vector must have exactly phi(order) entries.
  CyclotomicElement(unsigned long order, std::vector<Rational> coefficients);

  /// Reduces an arbitrary-degree polynomial in zeta modulo Phi_order.
  static CyclotomicElement from_polynomial(unsigned long order, std::span<const Rational> poly);
  static CyclotomicElement one(unsigned long order);
  static CyclotomicElement generator(unsigned long order);
  /// zeta^k for any integer k (negative exponents wrap modulo order).
  static CyclotomicElement zeta_power(unsigned long order, long k);

  [[nodiscard]] unsigned long order() const { return order_; }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] CyclotomicElement pow(unsigned long e) const;

  CyclotomicElement& operator+=(const CyclotomicElement& o);
  CyclotomicElement& operator-=(const CyclotomicElement& o);
  CyclotomicElement& operator*=(const CyclotomicElement& o);
  friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
  friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
  friend CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement& b) { return a *= b; }
  friend bool operator==(const CyclotomicElement&, const CyclotomicElement&) = default;

 private:
  void require_same_order(const CyclotomicElement& o) const;

  unsigned long order_;
  std::vector<Rational> coeffs_;
};

[[nodiscard]] CyclotomicElement cyclo_add(const CyclotomicElement& x, const CyclotomicElement& y);
[[nodiscard]] CyclotomicElement cyclo_mul(const CyclotomicElement& x, const CyclotomicElement& y);
[[nodiscard]] CyclotomicElement cyclo_reduce(unsigned long order, std::span<const Rational> poly);

}  // namespace sefib
