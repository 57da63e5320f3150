#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "qperm/ncalg/parse.hpp"
#include "qperm/qperm/presentation.hpp"
#include "qperm/rewrite/batch.hpp"
#include "qperm/rewrite/completion.hpp"
#include "qperm/rewrite/filtration.hpp"
#include "qperm/rewrite/presentation_io.hpp"
#include "qperm/rewrite/tensor_system.hpp"

using namespace qperm;

namespace {

RewriteSystem<Rational> idempotent_pair() {
  const auto a = make_alphabet({"p", "q"});
  const std::vector<NCPoly> rels{parse_ncpoly("p.p - p", a), parse_ncpoly("q.q - q", a)};
  return RewriteSystem<Rational>::from_relations(a, rels);
}

std::vector<std::vector<int>> lhs_words(const RewriteSystem<Rational>& sys) {
  std::vector<std::vector<int>> out;
  for (const auto* r : sys.rules()) out.emplace_back(r->lhs.begin(), r->lhs.end());
  return out;
}

}  // namespace

TEST_CASE("normal forms in the magic system") {
  const auto sys2 = magic_presentation(2).algebra.raw_system();
  const auto& a = sys2.alphabet();
  CHECK(sys2.normal_form(parse_ncpoly("u11.u12", a)).is_zero());
  CHECK(sys2.normal_form(parse_ncpoly("u11.u11", a)) == parse_ncpoly("u11", a));
  CHECK(sys2.normal_form(NCPoly::one(a)) == NCPoly::one(a));
  CHECK(sys2.reduces_to_zero(NCPoly(a)));

  const auto sys4 = complete_presentation(magic_presentation(4).algebra, 8).system;
  const auto& a4 = sys4.alphabet();
  CHECK(sys4.reduces_to_zero(parse_ncpoly("u11.u12 + u11.u13 + u11.u14 + u11.u11 - u11", a4)));
  CHECK(!sys4.reduces_to_zero(parse_ncpoly("u11.u33 - u33.u11", a4)));
}

TEST_CASE("completion of small magic systems") {
  auto r2 = complete_presentation(magic_presentation(2).algebra, 6);
  CHECK(r2.status.is_confluent());
  const auto words = basis_words(r2.system, 6);
  REQUIRE(words.size() == 2);
  CHECK(words[0].empty());
  CHECK(words[1].to_string(*r2.system.alphabet()) == "u11");
  CHECK(filtration_dimension(r2.system, 5) == std::vector<std::uint64_t>{1, 2, 2, 2, 2, 2});

  auto r3 = complete_presentation(magic_presentation(3).algebra, 8);
  CHECK(r3.status.is_confluent());
  const auto dims = filtration_dimension(r3.system, 8);
  CHECK(dims.back() == 6);
  CHECK(dims[dims.size() - 2] == 6);
}

TEST_CASE("overlap-free rules are already confluent") {
  auto r = complete(idempotent_pair(), 10);
  CHECK(r.status.is_confluent());
  CHECK(r.system.rule_count() == 2);
  CHECK(filtration_dimension(r.system, 3) == std::vector<std::uint64_t>{1, 3, 5, 7});
  CHECK(filtration_dimension(r.system, 10) == oracle::alternating_word_dimensions(10));
}

TEST_CASE("irreducible word counts match exhaustive enumeration") {
  for (int n = 2; n <= 3; ++n) {
    const auto sys = complete_presentation(magic_presentation(n).algebra, 8).system;
    const auto expected = oracle::count_avoiding(n * n, lhs_words(sys), 4);
    CHECK(irreducible_counts_by_length(sys, 4) == expected);
  }
  const auto semi = complete_presentation(semi_magic_presentation(2).algebra, 8);
  CHECK(irreducible_counts_by_length(semi.system, 5) == oracle::count_avoiding(4, lhs_words(semi.system), 5));
}

TEST_CASE("normal form is idempotent and batch kernels agree") {
  const auto sys = complete_presentation(magic_presentation(4).algebra, 8).system;
  const auto& a = sys.alphabet();
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> letter(0, 15), len(0, 4), coeff(-2, 2);
  std::vector<NCPoly> polys;
  for (int t = 0; t < 60; ++t) {
    std::vector<NCPoly::Term> terms;
    for (int k = 0; k < 3; ++k) {
      std::vector<Letter> w;
      for (int l = len(rng); l > 0; --l) w.push_back(static_cast<Letter>(letter(rng)));
      terms.emplace_back(Word(w), Rational(coeff(rng)));
    }
    polys.push_back(NCPoly::from_terms(a, terms));
  }
  const auto serial = normal_forms<Rational>(polys, sys, Exec::serial);
  const auto parallel = normal_forms<Rational>(polys, sys, Exec::parallel);
  CHECK(serial == parallel);
  for (const auto& nf : serial) CHECK(sys.normal_form(nf) == nf);
}

TEST_CASE("filtration refuses an unfinished system") {
  CHECK_THROWS_AS(filtration_dimension(idempotent_pair(), 3), InsufficientCompletion);
  const auto truncated = complete_presentation(magic_presentation(4).algebra, 2).system;
  REQUIRE(!truncated.status().is_confluent());
  CHECK_THROWS_AS(filtration_dimension(truncated, 30), InsufficientCompletion);
}

TEST_CASE("tensor square system") {
  const auto sys = complete_presentation(magic_presentation(2).algebra, 6).system;
  TensorEncoding enc(sys.alphabet(), 2);
  const auto t2 = tensor_power_system(sys, enc);
  CHECK(t2.rule_count() == 2 * sys.rule_count() + enc.cross_commutation_rules().size());
  const auto& t = enc.tagged();
  CHECK(t2.normal_form(parse_ncpoly("R:u11.L:u12", t)) == t2.normal_form(parse_ncpoly("L:u12.R:u11", t)));
  CHECK(t2.reduces_to_zero(parse_ncpoly("L:u11.L:u12", t)));
  CHECK(!t2.reduces_to_zero(parse_ncpoly("L:u11.R:u12", t)));
}

TEST_CASE("presentation files round trip") {
  std::istringstream in(
      "# idempotents\n"
      "alphabet p q\n"
      "order deglex\n"
      "field Q\n"
      "p.p - p\n"
      "q.q - q   # second\n");
  const auto pres = read_presentation(in);
  CHECK(pres.alphabet->size() == 2);
  const auto rels = rational_relations(pres);
  REQUIRE(rels.size() == 2);
  const auto text = write_presentation(pres.alphabet, pres.order, 1, rels);
  std::istringstream again(text);
  CHECK(rational_relations(read_presentation(again)) == rels);

  auto result = complete(RewriteSystem<Rational>::from_relations(pres.alphabet, rels), 6);
  const Json report = completion_report(result, 2);
  CHECK(report["status"] == "confluent");
  CHECK(report["rule_count"] == 2);
}

TEST_CASE("cyclotomic presentations and field mismatch") {
  std::istringstream in(
      "alphabet a\n"
      "field Q(z3)\n"
      "a.a.a - 1\n"
      "a - (z)\n");
  const auto pres = read_presentation(in);
  CHECK(pres.field_order == 3);
  CHECK_THROWS_AS(rational_relations(pres), std::invalid_argument);
  const auto rels = cyclotomic_relations(pres);
  auto r = complete(RewriteSystem<Cyclotomic>::from_relations(pres.alphabet, rels), 4);
  CHECK(r.status.is_confluent());
  CHECK(r.system.rule_count() == 1);

  std::istringstream bad("alphabet a\nfield R\na\n");
  CHECK_THROWS_AS(read_presentation(bad), std::invalid_argument);
}
