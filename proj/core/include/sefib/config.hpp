#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sefib/arith.hpp"

namespace sefib {

/// Ordered x-coordinates alpha_0..alpha_n of a point of U_{r,n}: nonzero, pairwise distinct,
/// with pairwise distinct r-th powers.
struct Config {
  int r = 1;
  int s = 2;
  std::vector<Rational> alphas;

  [[nodiscard]] std::size_t n() const { return alphas.empty() ? 0 : alphas.size() - 1; }

  friend bool operator==(const Config&, const Config&) = default;
};

struct Violation {
  enum class Kind { too_few, zero_entry, duplicate, power_collision };
  Kind kind;
  std::size_t i = 0;
  std::size_t j = 0;

  [[nodiscard]] std::string describe(int r) const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

[[nodiscard]] const char* to_string(Violation::Kind kind);

struct ConfigVerdict {
  int r = 1;
  std::optional<Config> config;
  std::vector<Violation> violations;

  [[nodiscard]] bool valid() const { return config.has_value(); }
};

/// Checks every invariant and reports each failing index/pair.
/// UsageError on empty alphas or bad (r, s).
[[nodiscard]] ConfigVerdict validate(int r, int s, const std::vector<Rational>& alphas);

/// validate() that throws MathError listing the violations.
[[nodiscard]] Config make_config(int r, int s, std::vector<Rational> alphas);

enum class Regime { genus_zero, genus_one, genus_ge_two };

[[nodiscard]] const char* to_string(Regime regime);

struct Classification {
  Regime regime;
  int n0;
};

/// Fiber regime for (s, n): genus 0 at (2,2), genus 1 at (2,3) and (3,2), otherwise >= 2.
/// n0 is 4 for s = 2 and 3 otherwise.
[[nodiscard]] Classification classify(int s, int n);

}  // namespace sefib
