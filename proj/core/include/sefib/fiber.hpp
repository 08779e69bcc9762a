#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sefib/arith.hpp"
#include "sefib/config.hpp"
#include "sefib/linalg.hpp"

namespace sefib {

/// Exponent convention of the trilinear forms
///   A_i Y_0^s + B_i Y_1^s + C_i Y_i^s,
///   A_i = a1 ai (ai^{e-1} - a1^{e-1}), B_i = a0 ai (a0^{e-1} - ai^{e-1}), C_i = a0 a1 (a1^{e-1} - a0^{e-1}),
/// equivalently det[[a0, a1, ai], [a0^e, a1^e, ai^e], [Y0^s, Y1^s, Yi^s]].
///
/// `family` uses e = r + 1: the forms vanish exactly when y_i^s = a x_i^{r+1} + b x_i has a common
/// solution (a, b), so fiber points correspond to curves y^s = x(a x^r + b).
/// `printed` uses e = r. Its forms vanish at the root-of-unity points checked by trivial_points;
/// for r = 1 its determinant rows coincide.
enum class FormConvention { family, printed };

[[nodiscard]] const char* to_string(FormConvention c);
[[nodiscard]] FormConvention parse_convention(const std::string& name);
/// Exponent e of the middle determinant row.
[[nodiscard]] unsigned long row_exponent(FormConvention c, int r);

/// Projective point in canonical form: integer entries, primitive, first nonzero entry positive.
class ProjPoint {
 public:
  /// UsageError on an empty or all-zero vector.
  explicit ProjPoint(const std::vector<Rational>& coords);

  [[nodiscard]] const std::vector<Rational>& coords() const { return coords_; }
  [[nodiscard]] std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  [[nodiscard]] std::size_t first_nonzero() const;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint& a, const ProjPoint& b) { return a.coords_ <=> b.coords_; }

 private:
  std::vector<Rational> coords_;
};

struct FiberEquation {
  std::size_t index = 0;  // i in 2..n
  Rational A;
  Rational B;
  Rational C;
  /// Raw triple = scale * (A, B, C).
  Rational scale{1};

  [[nodiscard]] std::array<Rational, 3> raw() const { return {scale * A, scale * B, scale * C}; }
  friend bool operator==(const FiberEquation&, const FiberEquation&) = default;
};

struct FiberSystem {
  Config config;
  FormConvention convention = FormConvention::family;
  std::vector<FiberEquation> equations;

  [[nodiscard]] std::size_t n() const { return config.n(); }
  friend bool operator==(const FiberSystem&, const FiberSystem&) = default;
};

/// Unnormalized (A_i, B_i, C_i) for index i of the given alphas.
[[nodiscard]] std::array<Rational, 3> raw_triple(const std::vector<Rational>& alphas, std::size_t i,
                                                 unsigned long exponent);

/// Integer-cleared, gcd-reduced, sign fixed so C > 0 (or the first nonzero entry when C = 0).
/// Returns the normalized triple and the scale with raw = scale * normalized.
[[nodiscard]] std::pair<std::array<Rational, 3>, Rational> normalize_triple(const std::array<Rational, 3>& t);

/// UsageError unless n >= 2.
[[nodiscard]] FiberSystem build_fiber(const Config& config, FormConvention convention = FormConvention::family);

/// det[[a0, a1, ai], [a0^e, a1^e, ai^e], [Y0^s, Y1^s, Yi^s]].
[[nodiscard]] Rational det_form(const Config& config, std::size_t i, const ProjPoint& y,
                                FormConvention convention = FormConvention::family);

/// A Y0^s + B Y1^s + C Yi^s for the given equation.
[[nodiscard]] Rational evaluate(const FiberEquation& eq, int s, const std::vector<Rational>& y);

struct FiberCheck {
  bool on_fiber = false;
  std::vector<Rational> residues;  // one per equation, in index order
  [[nodiscard]] std::vector<std::size_t> failing() const;
};

/// Evaluates every equation; workers > 1 partitions the equation range.
[[nodiscard]] FiberCheck on_fiber(const FiberSystem& system, const ProjPoint& y, unsigned workers = 1);

/// 1 + s^{n-1} ((n - 1) s - n - 1) / 2.
[[nodiscard]] BigInt fiber_genus(int s, int n);

/// (s - 1) s^{n-2}.
[[nodiscard]] BigInt gonality_lower_bound(int s, int n);

/// (n-1) x (n+1) Jacobian of the specialized forms at y.
[[nodiscard]] RationalMatrix jacobian(const FiberSystem& system, const ProjPoint& y);

struct SmoothnessReport {
  bool smooth = false;
  std::size_t rank = 0;
  std::size_t expected_rank = 0;
};

/// MathError when y is not on the fiber.
[[nodiscard]] SmoothnessReport smooth_at(const FiberSystem& system, const ProjPoint& y);

}  // namespace sefib
