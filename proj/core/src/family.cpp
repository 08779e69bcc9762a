#include "sefib/family.hpp"

#include <numeric>
#include <string>

#include "sefib/error.hpp"

namespace sefib {

void require_family_params(int r, int s) {
  if (r < 1) throw UsageError("r must be >= 1 (got " + std::to_string(r) + ")");
  if (s < 2) throw UsageError("s must be >= 2 (got " + std::to_string(s) + ")");
}

Rational family_rhs(const FamilyCurve& curve, const Rational& x) {
  return x * (curve.a * x.pow(static_cast<unsigned long>(curve.r)) + curve.b);
}

bool contains(const FamilyCurve& curve, const AffinePoint& p) {
  require_family_params(curve.r, curve.s);
  return p.y.pow(static_cast<unsigned long>(curve.s)) == family_rhs(curve, p.x);
}

bool smoothness(const FamilyCurve& curve) { return !curve.a.is_zero() && !curve.b.is_zero(); }

long family_genus(int r, int s) {
  require_family_params(r, s);
  const long m = r + 1;
  return ((s - 1L) * r + 1L - std::gcd(static_cast<long>(s), m)) / 2;
}

Rational TwistData::constant() const { return family_rhs(base, x0); }

bool TwistData::satisfies(const AffinePoint& p) const {
  return constant() * p.y.pow(static_cast<unsigned long>(base.s)) == family_rhs(base, p.x);
}

TwistData build_twist(const FamilyCurve& curve, const std::vector<AffinePoint>& points) {
  if (points.empty()) throw UsageError("build_twist needs at least one point");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!contains(curve, points[i])) {
      throw MathError("point " + std::to_string(i) + " is not on the curve");
    }
  }
  const AffinePoint& p0 = points.front();
  if (p0.y.is_zero()) throw MathError("y0 = 0: cannot normalize the twist by y0");

  TwistData twist{curve, p0.x, p0.y, {}};
  twist.points.reserve(points.size());
  twist.points.push_back({p0.x, Rational(1)});
  for (std::size_t i = 1; i < points.size(); ++i) twist.points.push_back({points[i].x, points[i].y / p0.y});
  for (std::size_t i = 0; i < twist.points.size(); ++i) {
    if (!twist.satisfies(twist.points[i])) {
      throw std::logic_error("twist point " + std::to_string(i) + " failed its defining equation");
    }
  }
  return twist;
}

}  // namespace sefib
