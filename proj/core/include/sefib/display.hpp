#pragma once

#include <string>

#include "sefib/fiber.hpp"

namespace sefib {

enum class DisplayStyle {
  normalized,  // A Y_0^s + B Y_1^s + C Y_i^s = 0 with the stored normalized triples
  common,      // c Y_i^s = -A Y_0^s - B Y_1^s with raw triples; c = C_i is shared by all equations
  monic,       // Y_i^s = -(A/C) Y_0^s - (B/C) Y_1^s
};

[[nodiscard]] DisplayStyle parse_display_style(const std::string& name);

/// Human-readable rendering of a fiber system, one equation per line.
[[nodiscard]] std::string format_display(const FiberSystem& system, DisplayStyle style);

}  // namespace sefib
