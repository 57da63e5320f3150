#include <random>

#include "doctest.h"
#include "qperm/ncalg/parse.hpp"
#include "qperm/ncalg/substitute.hpp"
#include "qperm/ncalg/tensor.hpp"
#include "qperm/qperm/presentation.hpp"

using namespace qperm;

namespace {

NCPoly random_poly(std::mt19937& rng, const AlphabetPtr& a) {
  std::uniform_int_distribution<int> len(0, 3), letter(0, static_cast<int>(a->size()) - 1), coeff(-3, 3);
  std::vector<NCPoly::Term> terms;
  for (int t = 0; t < 4; ++t) {
    std::vector<Letter> w;
    for (int k = len(rng); k > 0; --k) w.push_back(static_cast<Letter>(letter(rng)));
    terms.emplace_back(Word(w), Rational(coeff(rng)));
  }
  return NCPoly::from_terms(a, terms);
}

}  // namespace

TEST_CASE("products are concatenations") {
  const auto a = matrix_alphabet("u", 2);
  const auto u11 = parse_ncpoly("u11", a), u12 = parse_ncpoly("u12", a);
  CHECK((u11 * u12) == parse_ncpoly("u11.u12", a));
  CHECK(((u11 + u12) * NCPoly::one(a)) == u11 + u12);

  const auto pq = make_alphabet({"p", "q"});
  const auto p = parse_ncpoly("p", pq), q = parse_ncpoly("q", pq);
  CHECK((p - q) * (p + q) == parse_ncpoly("p.p + p.q - q.p - q.q", pq));
}

TEST_CASE("deglex order") {
  const auto a = matrix_alphabet("u", 2);
  const Letter u11 = a->index("u11"), u12 = a->index("u12"), u21 = a->index("u21");
  CHECK(compare_words(Word{}, Word{u11}) < 0);
  CHECK(compare_words(Word{u11, u12}, Word{u12}) > 0);
  CHECK(compare_words(Word{u11, u12}, Word{u11, u21}) < 0);
}

TEST_CASE("parse errors name the position") {
  const auto a = make_alphabet({"p", "q"});
  CHECK_THROWS_AS(parse_ncpoly("p.r", a), std::invalid_argument);
  CHECK_THROWS_AS(parse_ncpoly("2*", a), std::invalid_argument);
  CHECK(parse_ncpoly("0", a).is_zero());
  CHECK(parse_ncpoly("-3/2*p.q.p", a).leading_coeff() == Rational(-3, 2));
}

TEST_CASE("ring axioms on random samples") {
  std::mt19937 rng(3);
  const auto a = make_alphabet({"x", "y", "z"});
  bool noncommuting = false;
  for (int t = 0; t < 100; ++t) {
    const auto f = random_poly(rng, a), g = random_poly(rng, a), h = random_poly(rng, a);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * NCPoly::one(a) == f);
    CHECK(f - f == NCPoly(a));
    noncommuting = noncommuting || f * g != g * f;
  }
  CHECK(noncommuting);
}

TEST_CASE("comultiplication images") {
  const auto hopf = magic_presentation(2);
  const auto& tagged = hopf.tensor2->tagged();
  const auto u11 = parse_ncpoly("u11", hopf.alphabet());
  const auto d = substitute<Rational>(u11, hopf.delta_images, MapDirection::homomorphism, tagged);
  CHECK(d == parse_ncpoly("L:u11.R:u11 + L:u12.R:u21", tagged));
}

TEST_CASE("antipode reverses words") {
  const auto hopf = magic_presentation(2);
  const auto& a = hopf.alphabet();
  const auto& s = *hopf.antipode_images;
  CHECK(substitute<Rational>(parse_ncpoly("u12", a), s, MapDirection::antihomomorphism, a) ==
        parse_ncpoly("u21", a));
  CHECK(substitute<Rational>(parse_ncpoly("u11.u12", a), s, MapDirection::antihomomorphism, a) ==
        parse_ncpoly("u21.u11", a));
}

TEST_CASE("tensor encoding straightens across factors") {
  const auto base = make_alphabet({"a", "b"});
  TensorEncoding enc(base, 2);
  const auto& t = enc.tagged();
  CHECK(t->name(enc.tag(1, 0)) == "R:a");
  const auto mixed = parse_ncpoly("R:b.L:a.R:a.L:b", t);
  CHECK(enc.straighten(mixed) == parse_ncpoly("L:a.L:b.R:b.R:a", t));
  const auto w = enc.straighten_word(mixed.leading_word());
  CHECK(enc.is_straightened(w));
  const auto parts = enc.decode(w);
  CHECK(parts[0] == Word{0, 1});
  CHECK(parts[1] == Word{1, 0});
  CHECK(enc.encode(parts) == w);
  CHECK(enc.cross_commutation_rules().size() == 4);
  CHECK(tensor_tag_prefix(2, 3) == "T3:");
}

TEST_CASE("evaluation at commuting scalars") {
  const auto a = make_alphabet({"p", "q"});
  const std::vector<Rational> at{Rational(2), Rational(1, 3)};
  CHECK(evaluate<Rational>(parse_ncpoly("p.q - q.p + p.p - 1", a), at) == Rational(3));
}
