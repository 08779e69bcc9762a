#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sefib/sefib.hpp"

using namespace sefib;

namespace {

template <typename T>
T round_trip(const T& value) {
  const std::string text = Json(value).dump();
  return parse_json(text).get<T>();
}

}  // namespace

TEST_CASE("rationals are exact strings") {
  CHECK(Json(Rational(-3, 4)).dump() == "\"-3/4\"");
  CHECK(Json(Rational(5)).dump() == "\"5\"");
  CHECK(Json::parse("7").get<Rational>() == Rational(7));
  CHECK(Json::parse("\"10/4\"").get<Rational>() == Rational(5, 2));
  CHECK_THROWS_AS((void)Json::parse("1.5").get<Rational>(), UsageError);
  CHECK_THROWS_AS((void)parse_json("{\"a\":"), UsageError);

  const Rational huge = Rational(BigInt("-636018282314232937750225"), BigInt("7"));
  CHECK(round_trip(huge) == huge);
}

TEST_CASE("round trip of random values") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational q = oracle::random_rational(rng, 1000000, 1000);
    CHECK(round_trip(q) == q);

    const FamilyCurve c{1 + static_cast<int>(rng() % 5), 2 + static_cast<int>(rng() % 4), q,
                        oracle::random_rational(rng, 99, 9)};
    CHECK(round_trip(c) == c);

    const AffinePoint p{q, oracle::random_rational(rng, 99, 9)};
    CHECK(round_trip(p) == p);

    std::vector<Rational> alphas;
    for (int k = 0; k < 5; ++k) alphas.push_back(oracle::random_rational(rng, 50, 7));
    const Config cfg{c.r, c.s, alphas};
    CHECK(round_trip(cfg) == cfg);

    if (std::any_of(alphas.begin(), alphas.end(), [](const Rational& x) { return !x.is_zero(); })) {
      const ProjPoint y(alphas);
      CHECK(round_trip(y) == y);
    }
  }
}

TEST_CASE("round trip of systems, curves and reports") {
  for (auto conv : {FormConvention::family, FormConvention::printed}) {
    const auto sys = build_fiber(Config{2, 2, {1, 2, 3, 5, Rational(-7, 2)}}, conv);
    CHECK(round_trip(sys) == sys);
  }
  const auto fx = load_fixture("watkins14");
  const auto w = build_fiber(CurveWithPoints{fx.curve, fx.points}.config());
  CHECK(round_trip(w) == w);

  const CurveWithPoints cwp{fx.curve, fx.points};
  CHECK(round_trip(cwp) == cwp);

  const auto rep = search_ab(Config{1, 2, {1, 2}}, 6);
  const auto back = round_trip(rep);
  CHECK(back.config == rep.config);
  CHECK(back.height_bound == rep.height_bound);
  CHECK(back.hits == rep.hits);
  CHECK(back.search_space_size == rep.search_space_size);
  CHECK(back.elapsed == rep.elapsed);
  CHECK(back.complete == rep.complete);
  CHECK(Json(rep).at("note").get<std::string>().find("evidence") != std::string::npos);
}

TEST_CASE("output-only shapes") {
  const Json v = validate(2, 2, {1, -1});
  CHECK(v.at("valid") == false);
  CHECK(v.at("violations").at(0).at("kind") == "power_collision");
  CHECK(v.at("violations").at(0).at("message") == "alpha[0]^2 == alpha[1]^2");

  const Json t = trivial_points(2, 2, 2);
  CHECK(t.at("passed") == true);
  CHECK(t.at("tuple_space") == 64);

  const Json l = from_fiber_point(Config{2, 2, {1, 2, 3}}, ProjPoint({1, 1, 0}));
  CHECK(l.at("ok") == false);
  CHECK(l.at("obstruction").at("kind") == "off_fiber");

  const Json f = verify(load_fixture("rogers7"));
  CHECK(f.at("passed") == true);
  CHECK(f.at("fiber_genus") == "49");
  CHECK(f.at("digest").get<std::string>().size() == 16);
}

TEST_CASE("schema errors surface as usage errors") {
  CHECK_THROWS_AS((void)parse_json(R"({"r": 0, "s": 2, "a": "1", "b": "1"})").get<FamilyCurve>(), UsageError);
  CHECK_THROWS_AS((void)proj_point_from_json(Json::parse("[0, 0]")), UsageError);
  CHECK_THROWS_AS((void)proj_point_from_json(Json::parse("{}")), UsageError);
}
