#include <doctest.h>

#include "oracles.hpp"
#include "sefib/config.hpp"
#include "sefib/error.hpp"
#include "sefib/fiber.hpp"
#include "sefib/fixtures.hpp"

using namespace sefib;

TEST_CASE("valid configurations") {
  CHECK(validate(2, 2, {1, 2, 3}).valid());
  std::vector<Rational> xs;
  for (const auto& p : load_fixture("watkins14").points) xs.push_back(p.x);
  const auto v = validate(2, 2, xs);
  CHECK(v.valid());
  CHECK(v.config->n() == 13);
}

TEST_CASE("power collision") {
  const auto v = validate(2, 2, {1, -1});
  CHECK_FALSE(v.valid());
  REQUIRE(v.violations.size() == 1);
  CHECK(v.violations[0] == Violation{Violation::Kind::power_collision, 0, 1});
  // Odd r keeps 1 and -1 apart.
  CHECK(validate(3, 2, {1, -1}).valid());
}

TEST_CASE("every violation is reported") {
  const auto v = validate(2, 2, {0, 2, 2, -2, Rational(1, 2)});
  REQUIRE_FALSE(v.valid());
  const std::vector<Violation> expect{
      {Violation::Kind::zero_entry, 0, 0},
      {Violation::Kind::duplicate, 1, 2},
      {Violation::Kind::power_collision, 1, 3},
      {Violation::Kind::power_collision, 2, 3},
  };
  CHECK(v.violations == expect);
  CHECK(v.violations[1].describe(2).find('1') != std::string::npos);
}

TEST_CASE("too few and bad input") {
  const auto v = validate(2, 2, {5});
  CHECK_FALSE(v.valid());
  REQUIRE(v.violations.size() == 1);
  CHECK(v.violations[0].kind == Violation::Kind::too_few);
  CHECK_THROWS_AS((void)validate(2, 2, {}), UsageError);
  CHECK_THROWS_AS((void)validate(0, 2, {1, 2}), UsageError);
  CHECK_THROWS_AS((void)make_config(2, 2, {1, 1}), MathError);
  CHECK(make_config(2, 2, {1, 2, 3}).alphas.size() == 3);
}

TEST_CASE("classify examples") {
  CHECK(classify(2, 2).regime == Regime::genus_zero);
  CHECK(classify(2, 2).n0 == 4);
  CHECK(classify(3, 2).regime == Regime::genus_one);
  CHECK(classify(3, 2).n0 == 3);
  CHECK(classify(2, 4).regime == Regime::genus_ge_two);
  CHECK(classify(2, 4).n0 == 4);
  CHECK(std::string(to_string(Regime::genus_one)) == "GENUS_ONE");
}

TEST_CASE("classify agrees with fiber_genus") {
  for (int s = 2; s <= 6; ++s)
    for (int n = 2; n <= 10; ++n) {
      const BigInt g = fiber_genus(s, n);
      const Regime r = classify(s, n).regime;
      CHECK((r == Regime::genus_ge_two) == (g >= 2));
      CHECK((r == Regime::genus_zero) == (g == 0));
      CHECK((r == Regime::genus_one) == (g == 1));
    }
}
