#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sefib/cyclotomic.hpp"
#include "sefib/error.hpp"

using namespace sefib;

namespace {

CyclotomicElement random_element(std::mt19937_64& rng, unsigned long d) {
  std::vector<Rational> c;
  for (unsigned long k = 0; k < euler_phi(d); ++k) c.push_back(oracle::random_rational(rng, 20, 5));
  return {d, c};
}

}  // namespace

TEST_CASE("euler_phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(6) == 2);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(30) == 8);
  CHECK(euler_phi(7) == 6);
}

TEST_CASE("cyclotomic polynomials match the root product") {
  for (unsigned d = 1; d <= 30; ++d) {
    const auto expect = oracle::cyclotomic_by_roots(d);
    const auto& got = cyclotomic_polynomial(d);
    REQUIRE(got.size() == expect.size());
    for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k] == BigInt(expect[k]));
  }
}

TEST_CASE("small products") {
  const auto z4 = CyclotomicElement::generator(4);
  CHECK(z4 * z4 == CyclotomicElement(4, {Rational(-1), Rational(0)}));

  const auto z3 = CyclotomicElement::generator(3);
  CHECK((z3 * z3.pow(2)).is_one());

  const auto z6 = CyclotomicElement::generator(6);
  const auto m = z6 - CyclotomicElement::one(6);
  // (z - 1)^2 = z^2 - 2z + 1 and z^2 = z - 1, so the square is -z.
  CHECK(m * m == CyclotomicElement(6, {Rational(0), Rational(-1)}));
}

TEST_CASE("generator has exact order d") {
  for (unsigned long d = 1; d <= 30; ++d) {
    const auto z = CyclotomicElement::generator(d);
    CHECK(z.pow(d).is_one());
    for (unsigned long k = 1; k < d; ++k) CHECK_FALSE(z.pow(k).is_one());
  }
}

TEST_CASE("zeta_power wraps negative exponents") {
  CHECK(CyclotomicElement::zeta_power(5, -1) == CyclotomicElement::zeta_power(5, 4));
  CHECK(CyclotomicElement::zeta_power(12, 25) == CyclotomicElement::generator(12));
  CHECK(CyclotomicElement::zeta_power(8, 0).is_one());
}

TEST_CASE("reduction agrees with schoolbook division") {
  std::mt19937_64 rng(99);
  for (unsigned d : {3u, 5u, 6u, 8u, 9u, 12u, 15u}) {
    std::vector<long> phi;
    for (const auto& c : cyclotomic_polynomial(d)) phi.push_back(c.get_si());
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> poly;
      for (int k = 0; k < 3 * static_cast<int>(d); ++k) poly.push_back(oracle::random_rational(rng, 9, 3));
      const auto got = cyclo_reduce(d, poly);
      CHECK(got.coefficients() == oracle::poly_mod(poly, phi));
    }
  }
}

TEST_CASE("multiplication agrees with oracle and is a commutative ring") {
  std::mt19937_64 rng(5);
  for (unsigned d : {4u, 6u, 7u, 12u, 30u}) {
    std::vector<long> phi;
    for (const auto& c : cyclotomic_polynomial(d)) phi.push_back(c.get_si());
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = random_element(rng, d);
      const auto y = random_element(rng, d);
      const auto z = random_element(rng, d);
      CHECK(cyclo_mul(x, y).coefficients() ==
            oracle::poly_mod(oracle::poly_mul(x.coefficients(), y.coefficients()), phi));
      CHECK(x * y == y * x);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(cyclo_add(x, y) == x + y);
      CHECK((x - x).is_zero());
    }
  }
}

TEST_CASE("order mismatch is a usage error") {
  const auto a = CyclotomicElement::one(4);
  const auto b = CyclotomicElement::one(6);
  CHECK_THROWS_AS((void)(a * b), UsageError);
  CHECK_THROWS_AS((void)(a + b), UsageError);
  CHECK_THROWS_AS(CyclotomicElement(4, {Rational(1)}), UsageError);
}
