#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sefib/birat.hpp"
#include "sefib/error.hpp"
#include "sefib/fixtures.hpp"

using namespace sefib;

namespace {

const FamilyCurve kCurve{2, 2, 1, 3};

std::vector<AffinePoint> planted_points() {
  return oracle::distinct_powers(oracle::brute_force_points(kCurve, 20), 2);
}

}  // namespace

TEST_CASE("brute force finds the known points") {
  const auto pts = planted_points();
  for (const AffinePoint& p : std::vector<AffinePoint>{{1, 2}, {3, 6}, {12, 42}, {Rational(1, 4), Rational(7, 8)}}) {
    CHECK(std::find(pts.begin(), pts.end(), p) != pts.end());
  }
}

TEST_CASE("solve_ab") {
  CHECK(solve_ab(2, 2, {1, 2}, {2, 6}) == CurveParams{Rational(14, 3), Rational(-2, 3)});
  CHECK(solve_ab(2, 2, {1, 2}, {3, 6}) == CurveParams{1, 3});
  CHECK_THROWS_AS((void)solve_ab(2, 2, {1, 2}, {-1, 2}), MathError);
  CHECK_THROWS_AS((void)solve_ab(2, 2, {0, 0}, {1, 2}), MathError);

  const auto w = load_fixture("watkins14");
  CHECK(solve_ab(2, 2, w.points[0], w.points[1]) == CurveParams{1, w.curve.b});
  const auto r = load_fixture("rogers7");
  const BigInt n("797507543735");
  CHECK(solve_ab(2, 2, r.points[0], r.points[1]) == CurveParams{1, Rational(BigInt(-n * n))});
}

TEST_CASE("consistency") {
  CHECK(consistency(2, 2, {{1, 2}, {3, 6}, {12, 42}}).consistent);
  CHECK(consistency(2, 2, planted_points()).consistent);

  const auto w = load_fixture("watkins14");
  CHECK(consistency(2, 2, w.points).consistent);
  auto bad = w.points;
  bad[7].y += 1;
  const auto rep = consistency(2, 2, bad);
  CHECK_FALSE(rep.consistent);
  CHECK(rep.witness() == std::size_t{7});

  CHECK_THROWS_AS((void)consistency(2, 2, {{1, 2}, {3, 6}}), UsageError);
}

TEST_CASE("consistency agrees with the fiber") {
  std::mt19937_64 rng(8);
  const auto pts = planted_points();
  REQUIRE(pts.size() >= 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<AffinePoint> sample(pts.begin(), pts.begin() + 4);
    if (trial % 2) sample[3 - trial % 3].y += Rational(static_cast<long>(1 + rng() % 5));
    const CurveWithPoints cwp{kCurve, sample};
    const auto fiber = build_fiber(cwp.config());
    CHECK(consistency(2, 2, sample).consistent == on_fiber(fiber, to_fiber_point(cwp)).on_fiber);
  }
}

TEST_CASE("to_fiber_point") {
  const auto cwp = make_curve_with_points(kCurve, planted_points());
  CHECK(on_fiber(build_fiber(cwp.config()), to_fiber_point(cwp)).on_fiber);

  for (const auto& name : fixture_names()) {
    const auto fx = load_fixture(name);
    const auto c = make_curve_with_points(fx.curve, fx.points);
    std::vector<Rational> ys;
    for (const auto& p : fx.points) ys.push_back(p.y);
    CHECK(to_fiber_point(c) == ProjPoint(ys));
  }

  CHECK_THROWS_AS((void)make_curve_with_points(kCurve, {{1, 2}, {3, 5}, {12, 42}}), MathError);
  CHECK_THROWS_AS((void)make_curve_with_points(kCurve, {{1, 2}, {1, -2}, {12, 42}}), MathError);
}

TEST_CASE("from_fiber_point recovers the curve") {
  const auto cwp = make_curve_with_points(kCurve, planted_points());
  const auto y = to_fiber_point(cwp);
  const Rational scale = cwp.points[0].y / y[0];
  const auto lift = from_fiber_point(cwp.config(), y, scale);
  REQUIRE(lift.ok());
  CHECK(lift.curve->curve == kCurve);
  CHECK(lift.curve->points == cwp.points);

  // The default scale gives an isomorphic twist y -> c y, a -> c^2 a, b -> c^2 b.
  const auto twist = from_fiber_point(cwp.config(), y);
  REQUIRE(twist.ok());
  CHECK(twist.curve->curve.a * kCurve.b == twist.curve->curve.b * kCurve.a);
}

TEST_CASE("from_fiber_point obstructions") {
  const Config small{2, 2, {1, 2, 3}};
  const auto off = from_fiber_point(small, ProjPoint({1, 1, 0}));
  REQUIRE(off.obstruction.has_value());
  CHECK(off.obstruction->kind == Obstruction::Kind::off_fiber);
  CHECK(off.obstruction->index == std::size_t{2});

  // y^2 = x through x = 1, 4, 9 lifts to a = 0.
  const Config squares{2, 2, {1, 4, 9}};
  const auto sing = from_fiber_point(squares, ProjPoint({1, 2, 3}));
  REQUIRE(sing.obstruction.has_value());
  CHECK(sing.obstruction->kind == Obstruction::Kind::singular_curve);

  const auto cwp = make_curve_with_points(kCurve, planted_points());
  const auto zero = from_fiber_point(cwp.config(), to_fiber_point(cwp), Rational(0));
  REQUIRE(zero.obstruction.has_value());
  CHECK(zero.obstruction->kind == Obstruction::Kind::zero_scale);

  CHECK_THROWS_AS((void)from_fiber_point(small, ProjPoint({1, 1})), UsageError);
}
