#include "sefib/fiber.hpp"

#include <sstream>

#include "parallel.hpp"
#include "sefib/error.hpp"
#include "sefib/family.hpp"

namespace sefib {

const char* to_string(FormConvention c) {
  return c == FormConvention::family ? "family" : "printed";
}

FormConvention parse_convention(const std::string& name) {
  if (name == "family") return FormConvention::family;
  if (name == "printed") return FormConvention::printed;
  throw UsageError("unknown form convention '" + name + "' (expected family|printed)");
}

unsigned long row_exponent(FormConvention c, int r) {
  return static_cast<unsigned long>(c == FormConvention::family ? r + 1 : r);
}

ProjPoint::ProjPoint(const std::vector<Rational>& coords) {
  if (coords.empty()) throw UsageError("projective point with no coordinates");
  BigInt den = 1;
  BigInt content = 0;
  for (const auto& c : coords) den = lcm(den, c.den());
  std::vector<BigInt> ints;
  ints.reserve(coords.size());
  for (const auto& c : coords) {
    ints.push_back(c.num() * (den / c.den()));
    content = gcd(content, ints.back());
  }
  if (content == 0) throw UsageError("projective point with all coordinates zero");
  std::size_t lead = 0;
  while (ints[lead] == 0) ++lead;
  if (ints[lead] < 0) content = -content;
  coords_.reserve(ints.size());
  for (auto& v : ints) coords_.emplace_back(BigInt(v / content));
}

std::size_t ProjPoint::first_nonzero() const {
  std::size_t k = 0;
  while (coords_[k].is_zero()) ++k;
  return k;
}

std::string ProjPoint::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? " : " : "") << coords_[i];
  os << ']';
  return os.str();
}

std::array<Rational, 3> raw_triple(const std::vector<Rational>& alphas, std::size_t i, unsigned long exponent) {
  if (i < 2 || i >= alphas.size()) throw UsageError("equation index out of range");
  const unsigned long e1 = exponent - 1;
  const Rational& a0 = alphas[0];
  const Rational& a1 = alphas[1];
  const Rational& ai = alphas[i];
  return {a1 * ai * (ai.pow(e1) - a1.pow(e1)),
          a0 * ai * (a0.pow(e1) - ai.pow(e1)),
          a0 * a1 * (a1.pow(e1) - a0.pow(e1))};
}

std::pair<std::array<Rational, 3>, Rational> normalize_triple(const std::array<Rational, 3>& t) {
  BigInt den = 1;
  for (const auto& c : t) den = lcm(den, c.den());
  std::array<BigInt, 3> ints;
  BigInt content = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    ints[k] = t[k].num() * (den / t[k].den());
    content = gcd(content, ints[k]);
  }
  if (content == 0) return {t, Rational(1)};
  // Sign: positive C, falling back to the first nonzero entry.
  int sign = sgn(ints[2]);
  for (std::size_t k = 0; sign == 0 && k < 3; ++k) sign = sgn(ints[k]);
  if (sign < 0) content = -content;
  std::array<Rational, 3> normalized{Rational(BigInt(ints[0] / content)), Rational(BigInt(ints[1] / content)),
                                     Rational(BigInt(ints[2] / content))};
  return {normalized, Rational(content, den)};
}

FiberSystem build_fiber(const Config& config, FormConvention convention) {
  if (config.n() < 2) throw UsageError("fiber needs n >= 2 (at least three alphas)");
  const unsigned long e = row_exponent(convention, config.r);
  FiberSystem system{config, convention, {}};
  system.equations.reserve(config.n() - 1);
  for (std::size_t i = 2; i <= config.n(); ++i) {
    auto [t, scale] = normalize_triple(raw_triple(config.alphas, i, e));
    system.equations.push_back({i, t[0], t[1], t[2], scale});
  }
  return system;
}

Rational det_form(const Config& config, std::size_t i, const ProjPoint& y, FormConvention convention) {
  if (i < 2 || i > config.n()) throw UsageError("det_form index must satisfy 2 <= i <= n");
  if (y.size() != config.alphas.size()) throw UsageError("point length does not match configuration");
  const unsigned long e = row_exponent(convention, config.r);
  const unsigned long s = static_cast<unsigned long>(config.s);
  const auto& al = config.alphas;
  const std::array<std::array<Rational, 3>, 3> m{{
      {al[0], al[1], al[i]},
      {al[0].pow(e), al[1].pow(e), al[i].pow(e)},
      {y[0].pow(s), y[1].pow(s), y[i].pow(s)},
  }};
  return det3(m);
}

Rational evaluate(const FiberEquation& eq, int s, const std::vector<Rational>& y) {
  const auto e = static_cast<unsigned long>(s);
  return eq.A * y[0].pow(e) + eq.B * y[1].pow(e) + eq.C * y[eq.index].pow(e);
}

std::vector<std::size_t> FiberCheck::failing() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < residues.size(); ++k) {
    if (!residues[k].is_zero()) out.push_back(k + 2);
  }
  return out;
}

FiberCheck on_fiber(const FiberSystem& system, const ProjPoint& y, unsigned workers) {
  if (y.size() != system.config.alphas.size()) {
    throw UsageError("point has " + std::to_string(y.size()) + " coordinates, fiber lives in P^" +
                     std::to_string(system.n()));
  }
  FiberCheck check;
  check.residues.resize(system.equations.size());
  detail::for_each_block(system.equations.size(), 4, workers, [&](std::size_t, std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) check.residues[k] = evaluate(system.equations[k], system.config.s, y.coords());
  });
  check.on_fiber = true;
  for (const auto& r : check.residues) check.on_fiber = check.on_fiber && r.is_zero();
  return check;
}

BigInt fiber_genus(int s, int n) {
  if (s < 2 || n < 2) throw UsageError("fiber_genus requires s >= 2 and n >= 2");
  // 2g - 2 = s^{n-1} ((n-1) s - n - 1)
  const BigInt canonical = pow(BigInt(s), static_cast<unsigned long>(n - 1)) * BigInt((n - 1L) * s - n - 1L);
  return 1 + BigInt(canonical / 2);
}

BigInt gonality_lower_bound(int s, int n) {
  if (s < 2 || n < 2) throw UsageError("gonality_lower_bound requires s >= 2 and n >= 2");
  return BigInt(s - 1) * pow(BigInt(s), static_cast<unsigned long>(n - 2));
}

RationalMatrix jacobian(const FiberSystem& system, const ProjPoint& y) {
  if (y.size() != system.config.alphas.size()) throw UsageError("point length does not match fiber");
  const int s = system.config.s;
  const auto e = static_cast<unsigned long>(s - 1);
  RationalMatrix jac(system.equations.size(), y.size());
  for (std::size_t k = 0; k < system.equations.size(); ++k) {
    const auto& eq = system.equations[k];
    jac(k, 0) = Rational(s) * eq.A * y[0].pow(e);
    jac(k, 1) = Rational(s) * eq.B * y[1].pow(e);
    jac(k, eq.index) += Rational(s) * eq.C * y[eq.index].pow(e);
  }
  return jac;
}

SmoothnessReport smooth_at(const FiberSystem& system, const ProjPoint& y) {
  const auto check = on_fiber(system, y);
  if (!check.on_fiber) throw MathError("smooth_at: point is not on the fiber");
  SmoothnessReport report;
  report.expected_rank = system.equations.size();
  report.rank = exact_rank(jacobian(system, y));
  report.smooth = report.rank == report.expected_rank;
  return report;
}

}  // namespace sefib
