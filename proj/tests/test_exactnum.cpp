#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qperm/exactnum/cyclotomic.hpp"
#include "qperm/exactnum/linalg.hpp"
#include "qperm/exactnum/qpoly.hpp"
#include "qperm/exactnum/rational.hpp"

using namespace qperm;

namespace {

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 17);
  return Rational(num(rng), den(rng));
}

Cyclotomic random_cyclotomic(std::mt19937& rng, unsigned m) {
  std::vector<Rational> coeffs;
  for (unsigned k = 0; k < m; ++k) coeffs.push_back(random_rational(rng));
  return Cyclotomic::from_polynomial(m, QPoly(coeffs));
}

}  // namespace

TEST_CASE("rational parse and lowest terms") {
  CHECK(Rational::parse("6/-4") == Rational(-3, 2));
  CHECK(Rational::parse("-12") == Rational(-12));
  CHECK(Rational(10, 4).to_string() == "5/2");
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
  CHECK(Rational(2).inverse() == Rational(1, 2));
}

TEST_CASE("rational field axioms on random samples") {
  std::mt19937 rng(7);
  for (int t = 0; t < 300; ++t) {
    const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    CHECK(doctest::Approx((a * b).raw().get_d()) == a.raw().get_d() * b.raw().get_d());
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == QPoly({-1, 1}));
  CHECK(cyclotomic_polynomial(4) == QPoly({1, 0, 1}));
  CHECK(cyclotomic_polynomial(6) == QPoly({1, -1, 1}));
  CHECK(cyclotomic_polynomial(12) == QPoly({1, 0, -1, 0, 1}));
  for (unsigned m = 1; m <= 30; ++m) CHECK(cyclotomic_polynomial(m).degree() == static_cast<int>(euler_phi(m)));
}

TEST_CASE("embedding between cyclotomic fields") {
  CHECK(Cyclotomic(1, 2).embed(4).is_one());
  const auto minus_one = Cyclotomic::zeta(2).embed(4);
  REQUIRE(minus_one.coefficients().size() == 2);
  CHECK(minus_one.coefficients()[0] == Rational(-1));
  CHECK(minus_one.coefficients()[1] == Rational(0));
  const auto z3 = Cyclotomic::zeta(3).embed(6);
  CHECK(z3.coefficients()[0] == Rational(-1));
  CHECK(z3.coefficients()[1] == Rational(1));
  CHECK(z3 == Cyclotomic::zeta(6, 2));
  CHECK_THROWS_AS(Cyclotomic::zeta(4).embed(6), std::invalid_argument);
}

TEST_CASE("cyclotomic inverse") {
  CHECK(Cyclotomic(1).inverse().is_one());
  CHECK(Cyclotomic::zeta(4).inverse() == -Cyclotomic::zeta(4));
  CHECK(Cyclotomic(2).inverse() == Cyclotomic(Rational(1, 2)));
  CHECK_THROWS_AS(Cyclotomic(0).inverse(), std::domain_error);
}

TEST_CASE("roots of unity") {
  for (unsigned m = 1; m <= 12; ++m) {
    Cyclotomic power(1), sum(0);
    for (unsigned k = 0; k < m; ++k) {
      sum += Cyclotomic::zeta(m, k);
      power *= Cyclotomic::zeta(m);
    }
    CHECK(power.is_one());
    CHECK(sum.is_zero() == (m > 1));
  }
  CHECK(Cyclotomic::zeta(5, -1) == Cyclotomic::zeta(5, 4));
  CHECK(Cyclotomic::zeta(8, 2) == Cyclotomic::zeta(4));
  CHECK(Cyclotomic::zeta(4, 2).as_rational() == Rational(-1));
}

TEST_CASE("cyclotomic field axioms against complex arithmetic") {
  std::mt19937 rng(11);
  for (unsigned m : {3u, 4u, 5u, 8u, 12u}) {
    for (int t = 0; t < 40; ++t) {
      const auto a = random_cyclotomic(rng, m), b = random_cyclotomic(rng, m), c = random_cyclotomic(rng, m);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(oracle::near(oracle::to_complex(a * b), oracle::to_complex(a) * oracle::to_complex(b), 1e-6));
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("mixed-order arithmetic lands in the lcm field") {
  const auto x = Cyclotomic::zeta(3) + Cyclotomic::zeta(4);
  CHECK(x.order() == 12);
  CHECK(oracle::near(oracle::to_complex(x), oracle::to_complex(Cyclotomic::zeta(12, 4) + Cyclotomic::zeta(12, 3))));
  CHECK((Cyclotomic::zeta(12, 4)).restrict_to(3) == Cyclotomic::zeta(3));
  CHECK(!Cyclotomic::zeta(12).restrict_to(4).has_value());
}

TEST_CASE("parse cyclotomic expressions") {
  CHECK(parse_cyclotomic("z^4", 4).is_one());
  CHECK(parse_cyclotomic("-1 + z", 3) == Cyclotomic::zeta(3) - Cyclotomic(1));
  CHECK(parse_cyclotomic("1/2*z^2", 6) == Cyclotomic(Rational(1, 2)) * Cyclotomic::zeta(6, 2));
  CHECK_THROWS(parse_cyclotomic("z +", 3));
}

TEST_CASE("row reduction and span membership") {
  std::vector<Vec<Rational>> rows{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(rank(rows) == 2);
  CHECK(in_span(rows, Vec<Rational>{1, 3, 4}));
  CHECK(!in_span(rows, Vec<Rational>{0, 0, 1}));
  auto sol = solve_in_span<Rational>({{1, 0, 1}, {0, 1, 1}}, {2, 3, 5});
  REQUIRE(sol);
  CHECK((*sol)[0] == Rational(2));
  CHECK((*sol)[1] == Rational(3));
  CHECK(!solve_in_span<Rational>({{1, 0, 1}}, {0, 1, 0}));

  // Z3 character vectors are independent over Q(zeta_3).
  const auto z = Cyclotomic::zeta(3);
  std::vector<Vec<Cyclotomic>> chars{{1, 1, 1}, {1, z, z * z}, {1, z * z, z}};
  CHECK(rank(chars) == 3);
}
