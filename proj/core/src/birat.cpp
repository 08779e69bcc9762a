#include "sefib/birat.hpp"

#include <stdexcept>

#include "sefib/error.hpp"

namespace sefib {

Config CurveWithPoints::config() const {
  std::vector<Rational> xs;
  xs.reserve(points.size());
  for (const auto& p : points) xs.push_back(p.x);
  return make_config(curve.r, curve.s, std::move(xs));
}

CurveWithPoints make_curve_with_points(FamilyCurve curve, std::vector<AffinePoint> points) {
  require_family_params(curve.r, curve.s);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!contains(curve, points[i])) throw MathError("point " + std::to_string(i) + " is not on the curve");
  }
  CurveWithPoints cwp{std::move(curve), std::move(points)};
  (void)cwp.config();
  return cwp;
}

CurveParams solve_ab(int r, int s, const AffinePoint& p0, const AffinePoint& p1) {
  require_family_params(r, s);
  const auto rr = static_cast<unsigned long>(r);
  const auto ss = static_cast<unsigned long>(s);
  // [x0^{r+1} x0; x1^{r+1} x1] (a, b)^T = (y0^s, y1^s)^T
  const Rational m00 = p0.x.pow(rr + 1);
  const Rational m10 = p1.x.pow(rr + 1);
  const Rational det = m00 * p1.x - p0.x * m10;  // = x0 x1 (x0^r - x1^r)
  if (det.is_zero()) throw MathError("solve_ab: singular system (x0 x1 (x0^r - x1^r) = 0)");
  const Rational v0 = p0.y.pow(ss);
  const Rational v1 = p1.y.pow(ss);
  return {(v0 * p1.x - p0.x * v1) / det, (m00 * v1 - m10 * v0) / det};
}

std::optional<std::size_t> ConsistencyReport::witness() const {
  if (misfits.empty()) return std::nullopt;
  return misfits.front();
}

ConsistencyReport consistency(int r, int s, const std::vector<AffinePoint>& points) {
  if (points.size() < 3) throw UsageError("consistency needs at least three points");
  std::vector<Rational> xs;
  for (const auto& p : points) xs.push_back(p.x);
  const Config config = make_config(r, s, xs);

  ConsistencyReport report;
  report.params = solve_ab(r, s, points[0], points[1]);
  const FamilyCurve curve{r, s, report.params.a, report.params.b};
  std::vector<Rational> ys;
  for (const auto& p : points) ys.push_back(p.y);
  for (std::size_t i = 2; i < points.size(); ++i) {
    if (!contains(curve, points[i])) report.misfits.push_back(i);
  }
  // The determinant route needs a nonzero vector; an all-zero y vector fits any curve with y = 0.
  bool any_nonzero = false;
  for (const auto& y : ys) any_nonzero = any_nonzero || !y.is_zero();
  if (any_nonzero) {
    const ProjPoint y(ys);
    for (std::size_t i = 2; i < points.size(); ++i) {
      if (!det_form(config, i, y, FormConvention::family).is_zero()) report.nonzero_dets.push_back(i);
    }
  }
  if (report.misfits != report.nonzero_dets) {
    throw std::logic_error("consistency: direct fit and determinant test disagree");
  }
  report.consistent = report.misfits.empty();
  return report;
}

ProjPoint to_fiber_point(const CurveWithPoints& cwp) {
  std::vector<Rational> ys;
  ys.reserve(cwp.points.size());
  for (const auto& p : cwp.points) ys.push_back(p.y);
  return ProjPoint(ys);
}

const char* to_string(Obstruction::Kind kind) {
  switch (kind) {
    case Obstruction::Kind::off_fiber: return "off_fiber";
    case Obstruction::Kind::zero_scale: return "zero_scale";
    case Obstruction::Kind::singular_curve: return "singular_curve";
    case Obstruction::Kind::inconsistent_point: return "inconsistent_point";
  }
  return "unknown";
}

LiftResult from_fiber_point(const Config& config, const ProjPoint& y, std::optional<Rational> scale) {
  LiftResult result;
  if (y.size() != config.alphas.size()) throw UsageError("point length does not match configuration");
  const FiberCheck check = on_fiber(build_fiber(config), y);
  if (!check.on_fiber) {
    const auto bad = check.failing();
    result.obstruction = Obstruction{Obstruction::Kind::off_fiber, bad.front(),
                                     "equation " + std::to_string(bad.front()) + " has residue " +
                                         check.residues[bad.front() - 2].str()};
    return result;
  }
  result.scale = scale ? *scale : y[y.first_nonzero()].inverse();
  if (result.scale.is_zero()) {
    result.obstruction = Obstruction{Obstruction::Kind::zero_scale, std::nullopt, "scale must be nonzero"};
    return result;
  }

  std::vector<AffinePoint> pts;
  pts.reserve(y.size());
  for (std::size_t k = 0; k < y.size(); ++k) pts.push_back({config.alphas[k], result.scale * y[k]});
  const CurveParams ab = solve_ab(config.r, config.s, pts[0], pts[1]);
  const FamilyCurve curve{config.r, config.s, ab.a, ab.b};
  if (!smoothness(curve)) {
    result.obstruction = Obstruction{Obstruction::Kind::singular_curve, std::nullopt,
                                     "lifted curve has a = " + ab.a.str() + ", b = " + ab.b.str()};
    return result;
  }
  for (std::size_t k = 2; k < pts.size(); ++k) {
    if (!contains(curve, pts[k])) {
      result.obstruction = Obstruction{Obstruction::Kind::inconsistent_point, k,
                                       "point " + std::to_string(k) + " misses the lifted curve"};
      return result;
    }
  }
  result.curve = CurveWithPoints{curve, std::move(pts)};
  return result;
}

}  // namespace sefib
