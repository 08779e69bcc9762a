#include "sefib/display.hpp"

#include <sstream>

#include "sefib/error.hpp"

namespace sefib {

DisplayStyle parse_display_style(const std::string& name) {
  if (name == "normalized") return DisplayStyle::normalized;
  if (name == "common") return DisplayStyle::common;
  if (name == "monic") return DisplayStyle::monic;
  throw UsageError("unknown display style '" + name + "' (expected normalized|common|monic)");
}

namespace {

std::string var(std::size_t i, int s) { return "Y_" + std::to_string(i) + "^" + std::to_string(s); }

// Appends " + c v" / " - |c| v"; the first term carries its own sign.
void term(std::ostringstream& os, const Rational& c, const std::string& v, bool first) {
  if (first) {
    os << c << ' ' << v;
  } else if (c.sign() < 0) {
    os << " - " << (-c) << ' ' << v;
  } else {
    os << " + " << c << ' ' << v;
  }
}

}  // namespace

std::string format_display(const FiberSystem& system, DisplayStyle style) {
  const int s = system.config.s;
  std::ostringstream os;
  for (const auto& eq : system.equations) {
    switch (style) {
      case DisplayStyle::normalized:
        term(os, eq.A, var(0, s), true);
        term(os, eq.B, var(1, s), false);
        term(os, eq.C, var(eq.index, s), false);
        os << " = 0\n";
        break;
      case DisplayStyle::common: {
        const auto raw = eq.raw();
        os << "c " << var(eq.index, s) << " = ";
        term(os, -raw[0], var(0, s), true);
        term(os, -raw[1], var(1, s), false);
        os << '\n';
        break;
      }
      case DisplayStyle::monic:
        if (eq.C.is_zero()) {
          os << "(degenerate) ";
          term(os, eq.A, var(0, s), true);
          term(os, eq.B, var(1, s), false);
          os << " = 0\n";
          break;
        }
        os << var(eq.index, s) << " = ";
        term(os, -eq.A / eq.C, var(0, s), true);
        term(os, -eq.B / eq.C, var(1, s), false);
        os << '\n';
        break;
    }
  }
  if (style == DisplayStyle::common && !system.equations.empty()) {
    os << "where c = " << system.equations.front().raw()[2] << '\n';
  }
  return os.str();
}

}  // namespace sefib
