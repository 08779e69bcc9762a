#include <doctest.h>

#include "sefib/sefib.hpp"

using namespace sefib;

namespace {

std::string signed_term(const Rational& c, const std::string& v) {
  return (c.sign() < 0 ? " - " + (-c).str() : " + " + c.str()) + " " + v;
}

}  // namespace

TEST_CASE("small system in each style") {
  const auto sys = build_fiber(Config{2, 2, {1, 2, 3}}, FormConvention::printed);
  CHECK(format_display(sys, DisplayStyle::normalized) == "3 Y_0^2 - 3 Y_1^2 + 1 Y_2^2 = 0\n");
  CHECK(format_display(sys, DisplayStyle::common) == "c Y_2^2 = -6 Y_0^2 + 6 Y_1^2\nwhere c = 2\n");
  CHECK(format_display(sys, DisplayStyle::monic) == "Y_2^2 = -3 Y_0^2 + 3 Y_1^2\n");
  CHECK(parse_display_style("monic") == DisplayStyle::monic);
  CHECK_THROWS_AS((void)parse_display_style("fancy"), UsageError);
}

TEST_CASE("Watkins common constant") {
  const auto fx = load_fixture("watkins14");
  const auto sys = build_fiber(CurveWithPoints{fx.curve, fx.points}.config());
  const auto text = format_display(sys, DisplayStyle::common);
  CHECK(text.find("where c = " + fx.expected_c->str() + "\n") != std::string::npos);
  for (const auto& pe : fx.printed->equations) {
    // c Y_i^2 = -A Y_0^2 - B Y_1^2 with (A, B) the printed columns.
    const std::string line = "c Y_" + std::to_string(pe.index) + "^2 = " + (-pe.y0).str() + " Y_0^2" +
                             signed_term(-pe.y1, "Y_1^2") + "\n";
    CHECK(text.find(line) != std::string::npos);
  }
}

TEST_CASE("Rogers monic lines") {
  const auto fx = load_fixture("rogers7");
  const auto sys = build_fiber(CurveWithPoints{fx.curve, fx.points}.config());
  const auto text = format_display(sys, DisplayStyle::monic);
  for (const auto& pe : fx.printed->equations) {
    const std::string line = "Y_" + std::to_string(pe.index) + "^2 = " + pe.y0.str() + " Y_0^2" +
                             signed_term(pe.y1, "Y_1^2") + "\n";
    CHECK(text.find(line) != std::string::npos);
  }
}
