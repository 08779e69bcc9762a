#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sefib/fiber.hpp"

namespace sefib {

struct TrivialPointOptions {
  unsigned long max_order = 30;       // cap on d = lcm(r, s)
  std::uint64_t max_tuples = 100000;  // cap on enumerated exponent tuples
  /// Beyond max_tuples: refuse (false) or verify a seeded sample of max_tuples tuples (true).
  bool allow_sampling = false;
  std::uint64_t sample_seed = 0x5EF1B;
  FormConvention convention = FormConvention::printed;
  bool keep_tuples = true;
};

/// Exponents of one trivial point: X_k = zeta_r^{x[k]}, Y_k = zeta_s^{y[k]}.
struct ExponentTuple {
  std::vector<unsigned> x;
  std::vector<unsigned> y;
  friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;
};

struct TrivialPointCertificate {
  int r = 0;
  int s = 0;
  int n = 0;
  unsigned long order = 0;  // d = lcm(r, s)
  FormConvention convention = FormConvention::printed;
  std::uint64_t tuple_space = 0;  // (r s)^{n+1}
  bool exhaustive = true;
  std::uint64_t checked = 0;
  std::vector<ExponentTuple> verified;  // filled when keep_tuples
  std::vector<ExponentTuple> failed;

  [[nodiscard]] bool passed() const { return failed.empty() && checked > 0; }
};

/// Verifies in Q(zeta_d) that every form f_{i-1}, i = 2..n, vanishes at
/// X_k = zeta_r^{j_k}, Y_k = zeta_s^{i_k} for all exponent tuples (j mod r, i mod s).
/// CapExceeded when d exceeds max_order, or the tuple space exceeds max_tuples without sampling.
[[nodiscard]] TrivialPointCertificate trivial_points(int r, int s, int n, const TrivialPointOptions& options = {});

}  // namespace sefib
