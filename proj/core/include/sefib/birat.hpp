#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sefib/config.hpp"
#include "sefib/family.hpp"
#include "sefib/fiber.hpp"

namespace sefib {

/// A family curve with n + 1 marked points whose x-coordinates form a valid Config.
struct CurveWithPoints {
  FamilyCurve curve;
  std::vector<AffinePoint> points;

  [[nodiscard]] Config config() const;
  friend bool operator==(const CurveWithPoints&, const CurveWithPoints&) = default;
};

/// Checks both invariants; MathError naming the first offending point or violation.
[[nodiscard]] CurveWithPoints make_curve_with_points(FamilyCurve curve, std::vector<AffinePoint> points);

struct CurveParams {
  Rational a;
  Rational b;
  friend bool operator==(const CurveParams&, const CurveParams&) = default;
};

/// Unique (a, b) with y_k^s = a x_k^{r+1} + b x_k for k = 0, 1.
/// MathError when x0 x1 (x0^r - x1^r) = 0.
[[nodiscard]] CurveParams solve_ab(int r, int s, const AffinePoint& p0, const AffinePoint& p1);

struct ConsistencyReport {
  bool consistent = false;
  CurveParams params;                    // from the first two points
  std::vector<std::size_t> misfits;      // indices not on the solved curve
  std::vector<std::size_t> nonzero_dets; // indices i with nonvanishing determinant
  [[nodiscard]] std::optional<std::size_t> witness() const;
};

/// Whether all points lie on the curve fixed by the first two. Computed two ways
/// (direct fit and determinant vanishing); std::logic_error if they disagree.
[[nodiscard]] ConsistencyReport consistency(int r, int s, const std::vector<AffinePoint>& points);

/// [y_0 : ... : y_n] in canonical form; lies on build_fiber(cwp.config()).
[[nodiscard]] ProjPoint to_fiber_point(const CurveWithPoints& cwp);

struct Obstruction {
  enum class Kind { off_fiber, zero_scale, singular_curve, inconsistent_point };
  Kind kind;
  std::optional<std::size_t> index;
  std::string detail;
};

[[nodiscard]] const char* to_string(Obstruction::Kind kind);

struct LiftResult {
  std::optional<CurveWithPoints> curve;
  std::optional<Obstruction> obstruction;
  Rational scale;  // y_k = scale * Y_k
  [[nodiscard]] bool ok() const { return curve.has_value(); }
};

/// Interprets scale * Y_k as y-coordinates over the alphas and recovers the curve.
/// Default scale is 1 / Y_k at the first nonzero coordinate.
[[nodiscard]] LiftResult from_fiber_point(const Config& config, const ProjPoint& y,
                                          std::optional<Rational> scale = std::nullopt);

}  // namespace sefib
