#pragma once

#include <vector>

#include "sefib/arith.hpp"

namespace sefib {

/// The curve y^s = x(a x^r + b).
struct FamilyCurve {
  int r = 1;
  int s = 2;
  Rational a;
  Rational b;

  friend bool operator==(const FamilyCurve&, const FamilyCurve&) = default;
};

struct AffinePoint {
  Rational x;
  Rational y;

  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

/// Throws UsageError unless r >= 1 and s >= 2.
void require_family_params(int r, int s);

/// Right-hand side x(a x^r + b).
[[nodiscard]] Rational family_rhs(const FamilyCurve& curve, const Rational& x);

[[nodiscard]] bool contains(const FamilyCurve& curve, const AffinePoint& p);

/// a != 0 and b != 0, i.e. x(a x^r + b) is squarefree.
[[nodiscard]] bool smoothness(const FamilyCurve& curve);

/// Genus of the smooth model of y^s = f(x), f squarefree of degree r + 1:
/// ((s - 1) r + 1 - gcd(s, r + 1)) / 2.
[[nodiscard]] long family_genus(int r, int s);

/// The twist x0(a x0^r + b) t^s = x(a x^r + b) together with its canonical points.
struct TwistData {
  FamilyCurve base;
  Rational x0;
  Rational y0;
  std::vector<AffinePoint> points;  // (x0, 1), (x_i, y_i / y0)

  /// Twist constant x0(a x0^r + b).
  [[nodiscard]] Rational constant() const;
  [[nodiscard]] bool satisfies(const AffinePoint& p) const;
};

/// Requires every point on the curve and points[0].y != 0 (MathError otherwise).
[[nodiscard]] TwistData build_twist(const FamilyCurve& curve, const std::vector<AffinePoint>& points);

}  // namespace sefib
