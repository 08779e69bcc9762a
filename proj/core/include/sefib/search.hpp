#pragma once

#include <chrono>
#include <cstdint>
#include <stop_token>
#include <vector>

#include "sefib/birat.hpp"
#include "sefib/config.hpp"

namespace sefib {

/// Result of a height-bounded search. Evidence only: absence of hits proves nothing beyond the bound.
struct SearchReport {
  Config config;
  long height_bound = 0;
  std::vector<CurveWithPoints> hits;  // sorted by (|num a|, a, b)
  std::uint64_t search_space_size = 0;
  std::chrono::milliseconds elapsed{0};
  bool complete = true;
};

struct SearchOptions {
  unsigned workers = 1;
  /// Requests cooperative cancellation; the report is then marked incomplete.
  std::stop_token stop;
};

/// Every (a, b) = (u/w, v/w), |u|, |v| <= height, 1 <= w <= height, gcd(u, v, w) = 1, uv != 0,
/// with alpha_i (a alpha_i^r + b) an s-th power for all i. Witness y >= 0 for even s.
[[nodiscard]] SearchReport search_ab(const Config& config, long height, const SearchOptions& options = {});

struct SquareClassTable {
  std::uint64_t search_space_size = 0;
  std::vector<std::uint64_t> per_condition;  // candidates passing condition i alone
  std::vector<std::uint64_t> cumulative;     // candidates passing conditions 0..i
};

[[nodiscard]] SquareClassTable count_square_classes(const Config& config, long height, unsigned workers = 1);

}  // namespace sefib
