#include "sefib/trivial_points.hpp"

#include <numeric>
#include <random>
#include <string>

#include "sefib/cyclotomic.hpp"
#include "sefib/error.hpp"

namespace sefib {

namespace {

class FormEvaluator {
 public:
  FormEvaluator(int r, int s, int n, FormConvention convention)
      : r_(r), s_(s), n_(n), order_(std::lcm(static_cast<unsigned long>(r), static_cast<unsigned long>(s))),
        exponent_(row_exponent(convention, r)) {
    powers_.reserve(order_);
    for (unsigned long k = 0; k < order_; ++k) powers_.push_back(CyclotomicElement::zeta_power(order_, static_cast<long>(k)));
  }

  [[nodiscard]] unsigned long order() const { return order_; }

  // f_{i-1} = X1 Xi (Xi^{e-1} - X1^{e-1}) Y0^s + X0 Xi (X0^{e-1} - Xi^{e-1}) Y1^s + X0 X1 (X1^{e-1} - X0^{e-1}) Yi^s.
  // Each monomial is a root of unity, read from the power table by its exponent mod d; the
  // signed sum of the six monomials is then reduced in Q(zeta_d).
  [[nodiscard]] bool all_forms_vanish(const ExponentTuple& t) const {
    const unsigned long e1 = exponent_ - 1;
    const unsigned long x0 = x_exp(t, 0), x1 = x_exp(t, 1);
    const unsigned long y0 = s_ * y_exp(t, 0), y1 = s_ * y_exp(t, 1);
    for (int i = 2; i <= n_; ++i) {
      const unsigned long xi = x_exp(t, i);
      const unsigned long yi = s_ * y_exp(t, i);
      CyclotomicElement f(order_);
      f += zeta(x1 + xi + e1 * xi + y0);
      f -= zeta(x1 + xi + e1 * x1 + y0);
      f += zeta(x0 + xi + e1 * x0 + y1);
      f -= zeta(x0 + xi + e1 * xi + y1);
      f += zeta(x0 + x1 + e1 * x1 + yi);
      f -= zeta(x0 + x1 + e1 * x0 + yi);
      if (!f.is_zero()) return false;
    }
    return true;
  }

 private:
  [[nodiscard]] unsigned long x_exp(const ExponentTuple& t, int k) const {
    return (order_ / static_cast<unsigned long>(r_)) * t.x[static_cast<std::size_t>(k)];
  }
  [[nodiscard]] unsigned long y_exp(const ExponentTuple& t, int k) const {
    return (order_ / s_) * t.y[static_cast<std::size_t>(k)];
  }
  [[nodiscard]] const CyclotomicElement& zeta(unsigned long k) const { return powers_[k % order_]; }

  int r_;
  unsigned long s_;
  int n_;
  unsigned long order_;
  unsigned long exponent_;
  std::vector<CyclotomicElement> powers_;
};

// Mixed-radix decode: x digits base r, then y digits base s.
ExponentTuple decode(std::uint64_t index, int r, int s, int n) {
  ExponentTuple t;
  t.x.resize(static_cast<std::size_t>(n) + 1);
  t.y.resize(static_cast<std::size_t>(n) + 1);
  for (auto& d : t.x) {
    d = static_cast<unsigned>(index % static_cast<std::uint64_t>(r));
    index /= static_cast<std::uint64_t>(r);
  }
  for (auto& d : t.y) {
    d = static_cast<unsigned>(index % static_cast<std::uint64_t>(s));
    index /= static_cast<std::uint64_t>(s);
  }
  return t;
}

}  // namespace

TrivialPointCertificate trivial_points(int r, int s, int n, const TrivialPointOptions& options) {
  if (r < 1 || s < 1) throw UsageError("trivial_points requires r, s >= 1");
  if (n < 2) throw UsageError("trivial_points requires n >= 2");
  const unsigned long d = std::lcm(static_cast<unsigned long>(r), static_cast<unsigned long>(s));
  if (d > options.max_order) {
    throw CapExceeded("lcm(r, s) = " + std::to_string(d) + " exceeds the cap " + std::to_string(options.max_order));
  }

  TrivialPointCertificate cert;
  cert.r = r;
  cert.s = s;
  cert.n = n;
  cert.order = d;
  cert.convention = options.convention;

  // (r s)^{n+1}, saturating past the cap.
  std::uint64_t space = 1;
  bool overflow = false;
  for (int k = 0; k <= n && !overflow; ++k) {
    const auto base = static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(s);
    if (space > UINT64_MAX / base) overflow = true;
    else space *= base;
  }
  cert.tuple_space = overflow ? UINT64_MAX : space;
  const bool too_many = overflow || space > options.max_tuples;
  if (too_many && !options.allow_sampling) {
    throw CapExceeded("trivial point tuple space " + (overflow ? std::string("> 2^64") : std::to_string(space)) +
                      " exceeds the cap " + std::to_string(options.max_tuples));
  }

  const FormEvaluator eval(r, s, n, options.convention);
  auto check = [&](const ExponentTuple& t) {
    ++cert.checked;
    if (eval.all_forms_vanish(t)) {
      if (options.keep_tuples) cert.verified.push_back(t);
    } else {
      cert.failed.push_back(t);
    }
  };

  if (!too_many) {
    for (std::uint64_t idx = 0; idx < space; ++idx) check(decode(idx, r, s, n));
  } else {
    cert.exhaustive = false;
    std::mt19937_64 rng(options.sample_seed);
    ExponentTuple t;
    t.x.resize(static_cast<std::size_t>(n) + 1);
    t.y.resize(static_cast<std::size_t>(n) + 1);
    for (std::uint64_t k = 0; k < options.max_tuples; ++k) {
      for (auto& v : t.x) v = static_cast<unsigned>(rng() % static_cast<std::uint64_t>(r));
      for (auto& v : t.y) v = static_cast<unsigned>(rng() % static_cast<std::uint64_t>(s));
      check(t);
    }
  }
  return cert;
}

}  // namespace sefib
