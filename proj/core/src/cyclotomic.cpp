#include "sefib/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "sefib/error.hpp"

namespace sefib {

namespace {

// Exact quotient of integer polynomials; divisor is monic.
std::vector<BigInt> divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  const std::size_t dd = den.size() - 1;
  std::vector<BigInt> quot(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    const BigInt c = num[k];
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  return quot;
}

}  // namespace

unsigned long euler_phi(unsigned long d) {
  if (d == 0) throw UsageError("euler_phi(0)");
  unsigned long result = d;
  unsigned long m = d;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<BigInt>& cyclotomic_polynomial(unsigned long d) {
  if (d == 0) throw UsageError("cyclotomic polynomial of order 0");
  static std::mutex mutex;
  static std::map<unsigned long, std::unique_ptr<const std::vector<BigInt>>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return *it->second;
  }
  // x^d - 1 = prod_{e | d} Phi_e(x)
  std::vector<BigInt> poly(d + 1, 0);
  poly[0] = -1;
  poly[d] = 1;
  for (unsigned long e = 1; e < d; ++e) {
    if (d % e == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(e));
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(d, std::make_unique<const std::vector<BigInt>>(std::move(poly)));
  return *it->second;
}

CyclotomicElement::CyclotomicElement(unsigned long order)
    : order_(order), coeffs_(euler_phi(order), Rational(0)) {}

CyclotomicElement::CyclotomicElement(unsigned long order, std::vector<Rational> coefficients)
    : order_(order), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != euler_phi(order)) {
    throw UsageError("cyclotomic element of order " + std::to_string(order) + " needs " +
                     std::to_string(euler_phi(order)) + " coefficients");
  }
}

CyclotomicElement CyclotomicElement::from_polynomial(unsigned long order, std::span<const Rational> poly) {
  const auto& phi = cyclotomic_polynomial(order);
  const std::size_t deg = phi.size() - 1;
  std::vector<Rational> work(poly.begin(), poly.end());
  for (std::size_t k = work.size(); k-- > deg;) {
    if (work[k].is_zero()) continue;
    const Rational c = work[k];
    for (std::size_t j = 0; j <= deg; ++j) work[k - deg + j] -= c * Rational(phi[j]);
  }
  work.resize(deg, Rational(0));
  return CyclotomicElement(order, std::move(work));
}

CyclotomicElement CyclotomicElement::one(unsigned long order) {
  CyclotomicElement e(order);
  e.coeffs_[0] = 1;
  return e;
}

CyclotomicElement CyclotomicElement::generator(unsigned long order) { return zeta_power(order, 1); }

CyclotomicElement CyclotomicElement::zeta_power(unsigned long order, long k) {
  const long d = static_cast<long>(order);
  const long e = ((k % d) + d) % d;
  std::vector<Rational> poly(static_cast<std::size_t>(e) + 1, Rational(0));
  poly.back() = 1;
  return from_polynomial(order, poly);
}

bool CyclotomicElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CyclotomicElement::is_one() const { return *this == one(order_); }

CyclotomicElement CyclotomicElement::pow(unsigned long e) const {
  CyclotomicElement result = one(order_);
  CyclotomicElement base = *this;
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

void CyclotomicElement::require_same_order(const CyclotomicElement& o) const {
  if (order_ != o.order_) {
    throw UsageError("cyclotomic order mismatch: " + std::to_string(order_) + " vs " +
                     std::to_string(o.order_));
  }
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
  require_same_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& o) {
  require_same_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& o) {
  require_same_order(o);
  std::vector<Rational> product(coeffs_.size() * 2 - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) product[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  *this = from_polynomial(order_, product);
  return *this;
}

CyclotomicElement cyclo_add(const CyclotomicElement& x, const CyclotomicElement& y) { return x + y; }
CyclotomicElement cyclo_mul(const CyclotomicElement& x, const CyclotomicElement& y) { return x * y; }
CyclotomicElement cyclo_reduce(unsigned long order, std::span<const Rational> poly) {
  return CyclotomicElement::from_polynomial(order, poly);
}

}  // namespace sefib
