#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "qperm/ncalg/parse.hpp"
#include "qperm/qperm/checks.hpp"
#include "qperm/qperm/identities.hpp"
#include "qperm/qperm/quotient.hpp"
#include "qperm/rewrite/filtration.hpp"

using namespace qperm;

namespace {

std::shared_ptr<const RewriteSystem<Rational>> completed(const HopfPresentation& h, int cap = 8) {
  return std::make_shared<const RewriteSystem<Rational>>(complete_presentation(h.algebra, cap).system);
}

bool fact_holds(const CertificateReport& r, const std::string& label) {
  for (const auto& id : r.identities)
    if (id.label == label) return id.holds && !id.inconclusive;
  FAIL("no identity labelled " << label);
  return false;
}

// Independent pi_n: evaluate every word on the permutation matrix of sigma.
Rational pi_value(const NCPoly& p, int n, const oracle::Perm& sigma) {
  Rational total(0);
  for (const auto& [w, c] : p.terms()) {
    bool one = true;
    for (Letter g : w) {
      const int i = g / n, j = g % n;
      one = one && sigma[static_cast<std::size_t>(j)] == i;
    }
    if (one) total += c;
  }
  return total;
}

}  // namespace

TEST_CASE("magic presentation sizes") {
  const auto h1 = magic_presentation(1);
  CHECK(h1.alphabet()->size() == 1);
  const auto sys1 = complete_presentation(h1.algebra, 8).system;
  CHECK(sys1.normal_form(parse_ncpoly("u11", h1.alphabet())) == NCPoly::one(h1.alphabet()));
  CHECK(filtration_dimension(sys1, 3).back() == 1);

  const auto h4 = magic_presentation(4);
  CHECK(h4.alphabet()->size() == 16);
  // 4 outer indices x 16 ordered (i, j) pairs per orthogonality family, 4 per sum family.
  CHECK(h4.algebra.relations.size() == 2 * 64 + 2 * 4);
  CHECK(family_instances(h4.alphabet(), 4, RelationFamily::row_orthogonality).size() == 64);
  CHECK(family_instances(h4.alphabet(), 4, RelationFamily::column_sum).size() == 4);

  const auto semi = semi_magic_presentation(2);
  CHECK(!semi.has_antipode());
  const auto sys = complete_presentation(semi.algebra, 8).system;
  CHECK(!sys.reduces_to_zero(parse_ncpoly("u11.u21", semi.alphabet())));
  CHECK(matrix_generator_name("u", 12, 0, 10) == "u1_11");
  CHECK(parse_relation_family("3") == RelationFamily::column_orthogonality);
  CHECK(parse_relation_family("row_sum") == RelationFamily::row_sum);
}

TEST_CASE("multiplicative, semi-magic and magic checks") {
  for (int n = 1; n <= 4; ++n) {
    const auto h = magic_presentation(n);
    const auto x = generating_matrix(h, completed(h));
    CHECK(check_multiplicative(x, h).verdict == Verdict::verified);
    CHECK(check_magic(x).verdict == Verdict::verified);
  }
  const auto h3 = magic_presentation(3);
  const auto amb = completed(h3);
  MatrixOverAlgebra identity{3, {}, amb};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      identity.entries.push_back(i == j ? NCPoly::one(h3.alphabet()) : NCPoly(h3.alphabet()));
  CHECK(check_multiplicative(identity, h3).verdict == Verdict::verified);

  const auto z2 = group_algebra_presentation();
  const auto zamb = completed(z2);
  const NCPoly g = NCPoly::generator(z2.alphabet(), 0);
  const MatrixOverAlgebra diag{2, {g, NCPoly(z2.alphabet()), NCPoly(z2.alphabet()), g}, zamb};
  CHECK(check_multiplicative(diag, z2).verdict == Verdict::verified);
  const auto semi = check_semi_magic(diag);
  CHECK(semi.verdict == Verdict::refuted);
  REQUIRE(semi.witness);
}

TEST_CASE("algebra map against semi-magic, both directions") {
  const auto h3 = magic_presentation(3);
  const auto r = coaction_algebra_map_check(generating_matrix(h3, completed(h3)), &h3);
  CHECK(r.verdict == Verdict::verified);
  CHECK(r.details["legs"]["algebra_map"] == "verified");

  const auto z2 = group_algebra_presentation();
  const NCPoly g = NCPoly::generator(z2.alphabet(), 0);
  const MatrixOverAlgebra diag{2, {g, NCPoly(z2.alphabet()), NCPoly(z2.alphabet()), g}, completed(z2)};
  const auto bad = coaction_algebra_map_check(diag, &z2);
  CHECK(bad.details["legs"]["algebra_map"] == "refuted");
  CHECK(bad.details["legs"]["semi_magic"] == "refuted");
  CHECK(bad.details["legs"]["equivalence_consistent"] == true);
  const auto failed = bad.details["legs"]["algebra_map_failed"];
  CHECK(std::find(failed.begin(), failed.end(), "unit[e1]") != failed.end());

  // Permutation matrices over the ground field.
  const auto k = trivial_presentation();
  const auto kamb = completed(k);
  for (const auto& sigma : oracle::all_perms(3)) {
    MatrixOverAlgebra p{3, {}, kamb};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        p.entries.push_back(sigma[static_cast<std::size_t>(j)] == i ? NCPoly::one(k.alphabet()) : NCPoly(k.alphabet()));
    const auto rep = coaction_algebra_map_check(p);
    CHECK(rep.verdict == Verdict::verified);
    CHECK(rep.details["legs"]["algebra_map"] == "verified");
  }
}

TEST_CASE("Hopf axioms") {
  for (int n = 1; n <= 3; ++n) {
    const auto r = verify_hopf_axioms(magic_presentation(n), 8, Exec::serial);
    CHECK(r.verdict == Verdict::verified);
    CHECK(fact_holds(r, "antipode_squared[u11]"));
  }
  const auto semi = verify_hopf_axioms(semi_magic_presentation(3), 8);
  CHECK(semi.verdict == Verdict::verified);
  CHECK(verify_hopf_axioms(group_algebra_presentation(), 8).verdict == Verdict::verified);

  // A wrong comultiplication is caught.
  auto broken = magic_presentation(2);
  broken.delta_images[0] = broken.tensor2->embed(NCPoly::generator(broken.alphabet(), 0), 0);
  CHECK(verify_hopf_axioms(broken, 8).verdict == Verdict::refuted);
}

TEST_CASE("transpose inverse from three families") {
  using F = RelationFamily;
  CHECK(derive_transpose_inverse(3, {F::row_orthogonality, F::row_sum, F::column_orthogonality}).verdict ==
        Verdict::verified);
  CHECK(derive_transpose_inverse(5, {F::row_orthogonality, F::row_sum, F::column_orthogonality}).verdict ==
        Verdict::verified);
  const auto mirror = derive_transpose_inverse(2, {F::row_orthogonality, F::column_orthogonality, F::column_sum});
  CHECK(mirror.verdict == Verdict::verified);
  CHECK(mirror.claim.find("x^t.x") != std::string::npos);
  CHECK_THROWS_AS(derive_transpose_inverse(3, {F::row_sum, F::row_sum, F::column_sum}), std::invalid_argument);
}

TEST_CASE("gram diagonal over semi-magic") {
  for (int n = 1; n <= 4; ++n) CHECK(derive_gram_diagonal(n).verdict == Verdict::verified);
  const auto r = derive_gram_diagonal(2, 8, Exec::serial);
  CHECK(r.identities.size() == 4);
}

TEST_CASE("pi_n matches the permutation-matrix oracle") {
  const auto a2 = matrix_alphabet("u", 2);
  const auto f = pi_n(parse_ncpoly("u11", a2), 2);
  CHECK(f(Permutation::identity(2)) == Rational(1));
  CHECK(f(Permutation::from_cycles(2, {{1, 2}})) == Rational(0));

  for (int n = 2; n <= 4; ++n) {
    const auto a = matrix_alphabet("u", n);
    CHECK(pi_n(parse_ncpoly("u11.u12", a), n).is_zero());
    for (const auto* text : {"u11.u22 - 2*u21.u12 + 1/3", "u11 + u21.u21.u12 - u22", "u12.u21.u12"}) {
      const auto p = parse_ncpoly(text, a);
      const auto serial = pi_n(p, n, Exec::serial);
      CHECK(serial == pi_n(p, n, Exec::parallel));
      for (const auto& sigma : oracle::all_perms(n))
        CHECK(serial(Permutation(sigma)) == pi_value(p, n, sigma));
    }
  }
  const auto a4 = matrix_alphabet("u", 4);
  CHECK(pi_n(parse_ncpoly("u11.u33 - u33.u11", a4), 4).is_zero());
}

TEST_CASE("pi_n isomorphism check") {
  for (int n = 1; n <= 3; ++n) {
    const auto r = pi_n_isomorphism_check(n);
    CHECK(r.verdict == Verdict::verified);
    CHECK(fact_holds(r, "basis_count"));
    CHECK(fact_holds(r, "evaluation_rank"));
    const auto sys = complete_presentation(magic_presentation(n).algebra, 8).system;
    CHECK(static_cast<long>(filtration_dimension(sys, 2 * n).back()) == oracle::factorial(n));
  }
  const auto r4 = pi_n_isomorphism_check(4);
  CHECK(r4.verdict == Verdict::verified);
  CHECK(fact_holds(r4, "kernel_pi_image"));
  CHECK(fact_holds(r4, "kernel_nonzero"));
}

TEST_CASE("block idempotent witness") {
  const auto w = idempotent_block_matrix(4);
  CHECK(check_magic(w).verdict == Verdict::verified);
  const auto& a = w.alphabet();
  CHECK(w(0, 1) == parse_ncpoly("1 - p", a));
  CHECK(w.ambient->normal_form(w(0, 1) * w(0, 1)) == w(0, 1));
  CHECK(w(0, 0) * w(2, 2) - w(2, 2) * w(0, 0) == parse_ncpoly("p.q - q.p", a));

  const auto r = block_witness(4, 10);
  CHECK(r.verdict == Verdict::verified);
  std::vector<std::uint64_t> dims;
  for (const auto& d : r.details["filtration_dimensions"]) dims.push_back(d.get<std::uint64_t>());
  CHECK(dims == oracle::alternating_word_dimensions(10));
  CHECK(check_magic(idempotent_block_matrix(5)).verdict == Verdict::verified);
  CHECK_THROWS_AS(idempotent_block_matrix(3), std::invalid_argument);
}
