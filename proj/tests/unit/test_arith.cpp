#include <doctest.h>

#include <random>
#include <unordered_set>

#include "oracles.hpp"
#include "sefib/arith.hpp"
#include "sefib/error.hpp"

using namespace sefib;

TEST_CASE("integer_nth_root examples") {
  CHECK(integer_nth_root(0, 2) == BigInt(0));
  CHECK(integer_nth_root(729, 3) == BigInt(9));
  CHECK_FALSE(integer_nth_root(728, 3).has_value());
  CHECK(integer_nth_root(1, 7) == BigInt(1));
  CHECK_THROWS_AS((void)integer_nth_root(-8, 3), UsageError);
  CHECK_THROWS_AS((void)integer_nth_root(8, 1), UsageError);
}

TEST_CASE("integer_nth_root agrees with bisection oracle") {
  std::mt19937_64 rng(17);
  for (unsigned long s = 2; s <= 6; ++s) {
    for (int trial = 0; trial < 200; ++trial) {
      const BigInt base = static_cast<long>(rng() % 5000);
      const BigInt m = pow(base, s) + static_cast<long>(rng() % 3);
      CHECK(integer_nth_root(m, s) == oracle::bisect_root(m, s));
    }
  }
}

TEST_CASE("integer_nth_root on large perfect powers") {
  const BigInt big("797507543735");
  CHECK(integer_nth_root(big * big, 2) == big);
  CHECK_FALSE(integer_nth_root(big * big + 1, 2).has_value());
  CHECK(integer_nth_root(pow(big, 5), 5) == big);
}

TEST_CASE("is_sth_power examples") {
  CHECK(is_sth_power(Rational(4, 9), 2) == Rational(2, 3));
  CHECK(is_sth_power(Rational(-8, 27), 3) == Rational(-2, 3));
  CHECK_FALSE(is_sth_power(Rational(2), 2).has_value());
  CHECK_FALSE(is_sth_power(Rational(-4), 2).has_value());
  CHECK(is_sth_power(Rational(0), 4) == Rational(0));
  CHECK_FALSE(is_sth_power(Rational(4, 3), 2).has_value());
}

TEST_CASE("is_sth_power round trip") {
  std::mt19937_64 rng(3);
  for (unsigned long s = 2; s <= 5; ++s) {
    for (int trial = 0; trial < 100; ++trial) {
      const Rational t = oracle::random_rational(rng, 1000, 1000);
      const auto root = is_sth_power(t.pow(s), s);
      REQUIRE(root.has_value());
      CHECK(root->pow(s) == t.pow(s));
      if (s % 2 == 0) CHECK(*root == t.abs()); else CHECK(*root == t);
    }
  }
}

TEST_CASE("Rational parse and print") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-14") == Rational(-14));
  CHECK(Rational::parse("\xE2\x88\x92" "2/3") == Rational(-2, 3));
  CHECK(Rational::parse(" +5 ") == Rational(5));
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(7).str() == "7");
  CHECK_THROWS_AS((void)Rational::parse("1/0"), Error);
  CHECK_THROWS_AS((void)Rational::parse("abc"), UsageError);
  CHECK_THROWS_AS((void)Rational::parse(""), UsageError);
  CHECK_THROWS_AS((void)Rational::parse("1.5"), UsageError);
}

TEST_CASE("Rational arithmetic") {
  const Rational a(2, 3);
  const Rational b(-5, 7);
  CHECK(a + b == Rational(-1, 21));
  CHECK(a * b == Rational(-10, 21));
  CHECK(a / b == Rational(-14, 15));
  CHECK(-a == Rational(-2, 3));
  CHECK(a.inverse() == Rational(3, 2));
  CHECK(b.pow(3) == Rational(-125, 343));
  CHECK(Rational(-9, 4).height() == BigInt(9));
  CHECK(a > b);
  CHECK_THROWS_AS((void)(a / Rational(0)), MathError);
  CHECK_THROWS_AS((void)Rational(0).inverse(), MathError);
}

TEST_CASE("Rational hashing respects equality") {
  std::unordered_set<Rational> set{Rational(1, 2), Rational(2, 4), Rational(-1, 2)};
  CHECK(set.size() == 2);
}

TEST_CASE("gcd and lcm") {
  CHECK(gcd(12, 18) == BigInt(6));
  CHECK(lcm(4, 6) == BigInt(12));
  CHECK(pow(BigInt(3), 4) == BigInt(81));
}
