#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sefib/birat.hpp"
#include "sefib/fiber.hpp"

namespace sefib {

/// The conic A Y0^2 + B Y1^2 + C Y2^2 = 0 with a rational base point.
struct ConicModel {
  Rational A;
  Rational B;
  Rational C;
  ProjPoint base;

  [[nodiscard]] Rational evaluate(const ProjPoint& p) const;
};

/// Checks nonzero coefficients and that base lies on the conic (MathError otherwise).
[[nodiscard]] ConicModel make_conic(Rational A, Rational B, Rational C, ProjPoint base);

/// First primitive integer solution with all |Y_k| <= height, ordered by height, then
/// lexicographically on (|Y_0|, |Y_1|, |Y_2|), then by sign pattern with + before -.
/// Solutions are reported in canonical form; nullopt if there is none.
[[nodiscard]] std::optional<ProjPoint> find_conic_point(const Rational& A, const Rational& B, const Rational& C,
                                                        long height);

/// find_conic_point on the single equation of an s = 2, n = 2 fiber (UsageError otherwise).
[[nodiscard]] std::optional<ProjPoint> find_base_point(const FiberSystem& system, long height);

struct ParamPoint {
  ProjPoint point;
  bool tangent = false;  // direction was tangent at the base point; point == base
};

/// Second intersection of the conic with the line through the base point and the point of the
/// coordinate line {Y_k = 0} (k = first nonzero coordinate of base) given by the direction t.
[[nodiscard]] ParamPoint parametrize(const ConicModel& model, std::pair<long, long> t);

/// Coprime direction pairs in enumeration order: by max(|p|, |q|), then lexicographic,
/// one representative per projective class.
[[nodiscard]] std::vector<std::pair<long, long>> direction_sequence(std::size_t count);

struct EnumerateOptions {
  long search_height = 50;
  unsigned workers = 1;
  /// Upper bound on directions tried before giving up on reaching count.
  std::size_t max_directions = 1000000;
};

/// Up to count distinct smooth curves through three points with x = alpha_0, alpha_1, alpha_2.
/// MathError when no base point exists within search_height.
[[nodiscard]] std::vector<CurveWithPoints> enumerate_curves(const Config& config, std::size_t count,
                                                            const EnumerateOptions& options = {});

}  // namespace sefib
