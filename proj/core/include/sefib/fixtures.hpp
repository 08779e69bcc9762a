#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sefib/family.hpp"

namespace sefib {

/// One transcribed line "lhs * Y_i^s = y0 * Y_0^s + y1 * Y_1^s".
struct PrintedEquation {
  std::size_t index = 0;
  Rational lhs;
  Rational y0;
  Rational y1;
};

struct PrintedSystem {
  enum class Layout { common_lhs, monic };
  /// `literal`: the line is the equation y0 Y0^s + y1 Y1^s - lhs Yi^s = 0.
  /// `coefficients`: the printed columns are the triple (A, B, C) = (y0, y1, lhs) of A Y0^s + B Y1^s + C Yi^s = 0.
  enum class Reading { literal, coefficients };

  Layout layout = Layout::common_lhs;
  Reading reading = Reading::literal;
  std::vector<PrintedEquation> equations;

  [[nodiscard]] static std::array<Rational, 3> triple(const PrintedEquation& eq, Reading reading);
};

struct Fixture {
  std::string name;
  std::string description;
  FamilyCurve curve;
  std::vector<AffinePoint> points;
  BigInt expected_fiber_genus;
  std::optional<Rational> expected_c;
  std::optional<PrintedSystem> printed;
  std::uint64_t digest = 0;  // FNV-1a 64 of the source JSON text
};

[[nodiscard]] std::vector<std::string> fixture_names();
/// Embedded fixture by name; UsageError for unknown names.
[[nodiscard]] Fixture load_fixture(std::string_view name);
[[nodiscard]] Fixture parse_fixture(std::string_view json_text);
[[nodiscard]] std::string_view fixture_source(std::string_view name);
[[nodiscard]] std::uint64_t fnv1a64(std::string_view text);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct EquationMatch {
  std::size_t index = 0;
  bool matched = false;                  // under the fixture's declared reading
  std::optional<Rational> scalar;        // constructed raw triple = scalar * printed triple
  bool literal_matched = false;          // outcome of the literal reading, always reported
  std::optional<Rational> literal_scalar;
};

struct FixtureReport {
  std::string name;
  std::uint64_t digest = 0;
  BigInt fiber_genus;
  std::size_t jacobian_rank = 0;
  std::vector<CheckResult> checks;
  std::vector<EquationMatch> equations;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] const CheckResult* find(std::string_view check) const;
};

/// Recomputes everything from (r, s, a, b, points): membership, configuration, fiber, point on
/// fiber, Jacobian rank, genus, shared constant, printed equations, (a, b) recovery.
[[nodiscard]] FixtureReport verify(const Fixture& fixture, unsigned workers = 1);

/// Scalar lambda with t == lambda * p (lambda != 0), if one exists.
[[nodiscard]] std::optional<Rational> proportionality(const std::array<Rational, 3>& t, const std::array<Rational, 3>& p);

}  // namespace sefib
