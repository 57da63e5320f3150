#include "qperm/qperm/checks.hpp"

#include <stdexcept>

#include "qperm/rewrite/batch.hpp"
#include "qperm/rewrite/tensor_system.hpp"

namespace qperm {

namespace {

constexpr std::size_t kExpressionLimit = 600;

std::string clip(std::string s) {
  if (s.size() > kExpressionLimit) s = s.substr(0, kExpressionLimit) + " ...";
  return s;
}

Json completion_json(const CompletionResult<Rational>& r) {
  Json j;
  j["status"] = r.status.to_string();
  j["rule_count"] = r.system.rule_count();
  j["rule_count_history"] = r.rule_count_history;
  return j;
}

// Moves a polynomial from one tensor encoding into consecutive factors of a
// wider one starting at `offset`.
NCPoly relabel(const NCPoly& p, const TensorEncoding& from, const TensorEncoding& to, unsigned offset) {
  std::vector<NCPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [w, c] : p.terms()) {
    std::vector<Letter> letters;
    letters.reserve(w.size());
    for (Letter l : w) letters.push_back(to.tag(from.factor_of(l) + offset, from.base_letter(l)));
    terms.emplace_back(Word(std::move(letters)), c);
  }
  return NCPoly::from_terms(to.tagged(), std::move(terms));
}

std::vector<NCPoly> embedded_generators(const TensorEncoding& enc, unsigned factor) {
  std::vector<NCPoly> out;
  for (std::size_t g = 0; g < enc.base()->size(); ++g)
    out.push_back(enc.embed(NCPoly::generator(enc.base(), static_cast<Letter>(g)), factor));
  return out;
}

}  // namespace

std::vector<CheckedIdentity> reduce_identities(const std::vector<LabelledPoly>& polys,
                                               const RewriteSystem<Rational>& sys, Exec exec) {
  std::vector<NCPoly> in;
  in.reserve(polys.size());
  for (const auto& p : polys) in.push_back(p.poly);
  const auto nfs = normal_forms<Rational>(in, sys, exec);
  const bool confluent = sys.status().is_confluent();
  std::vector<CheckedIdentity> out;
  out.reserve(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const bool zero = nfs[i].is_zero();
    out.push_back({polys[i].label, clip(polys[i].poly.to_string()), clip(nfs[i].to_string()), zero,
                   !zero && !confluent});
  }
  return out;
}

CertificateReport check_multiplicative(const MatrixOverAlgebra& x, const HopfPresentation& hopf, Exec exec) {
  x.validate();
  if (!same_alphabet(x.alphabet(), hopf.alphabet()))
    throw std::invalid_argument("matrix entries do not live in " + hopf.algebra.name);
  const auto& enc = *hopf.tensor2;
  const auto t2 = tensor_power_system(*x.ambient, enc);
  CertificateReport report;
  report.claim = "matrix is multiplicative over " + hopf.algebra.name;
  std::vector<LabelledPoly> deltas;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      NCPoly d = substitute<Rational>(x(i, j), hopf.delta_images, MapDirection::homomorphism, enc.tagged());
      for (int k = 0; k < x.n; ++k) {
        const NCPoly parts[2] = {x(i, k), x(k, j)};
        d -= enc.pure_tensor<Rational>(parts);
      }
      deltas.push_back({"delta[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]", std::move(d)});
    }
  for (auto& id : reduce_identities(deltas, t2, exec)) report.add(std::move(id));
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      const Rational e = evaluate<Rational>(x(i, j), hopf.counit_images);
      report.add_fact("counit[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]",
                      "eps(x_ij) = " + e.to_string() + ", expected " + (i == j ? "1" : "0"),
                      e == Rational(i == j ? 1 : 0));
    }
  report.details["n"] = x.n;
  report.finalize();
  return report;
}

namespace {

CertificateReport check_families(const MatrixOverAlgebra& x, const std::vector<RelationFamily>& families,
                                 const std::string& claim, Exec exec) {
  std::vector<LabelledPoly> polys;
  for (auto f : families)
    for (auto& p : family_instances(x, f)) polys.push_back(std::move(p));
  CertificateReport report;
  report.claim = claim;
  for (auto& id : reduce_identities(polys, *x.ambient, exec)) report.add(std::move(id));
  report.details["n"] = x.n;
  report.details["ambient_status"] = x.ambient->status().to_string();
  report.finalize();
  return report;
}

}  // namespace

CertificateReport check_semi_magic(const MatrixOverAlgebra& x, Exec exec) {
  return check_families(x, {RelationFamily::row_orthogonality, RelationFamily::row_sum}, "matrix is semi-magic", exec);
}

CertificateReport check_magic(const MatrixOverAlgebra& x, Exec exec) {
  return check_families(x,
                        {RelationFamily::row_orthogonality, RelationFamily::row_sum,
                         RelationFamily::column_orthogonality, RelationFamily::column_sum},
                        "matrix is magic", exec);
}

CertificateReport coaction_algebra_map_check(const MatrixOverAlgebra& x, const HopfPresentation* hopf, Exec exec) {
  x.validate();
  CertificateReport report;
  report.claim = "beta(e_i) = sum_k e_k (x) x_ki is an algebra map iff x is semi-magic";
  Json legs = Json::object();

  if (hopf) {
    auto mult = check_multiplicative(x, *hopf, exec);
    report.add_fact("multiplicative", "x is multiplicative over " + hopf->algebra.name,
                    mult.verdict == Verdict::verified, mult.verdict == Verdict::inconclusive);
    legs["multiplicative"] = to_string(mult.verdict);
  }

  // Coefficients of e_k in beta(e_i)beta(e_j) - delta_ij beta(e_i) and in
  // beta(1) - 1 (x) 1.
  const auto& alpha = x.alphabet();
  std::vector<LabelledPoly> algebra_map;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j)
      for (int k = 0; k < x.n; ++k) {
        NCPoly c = x(k, i) * x(k, j);
        if (i == j) c -= x(k, i);
        algebra_map.push_back({"product[e" + std::to_string(i + 1) + ".e" + std::to_string(j + 1) + ";e" +
                                   std::to_string(k + 1) + "]",
                               std::move(c)});
      }
  for (int k = 0; k < x.n; ++k) {
    NCPoly c = -NCPoly::one(alpha);
    for (int i = 0; i < x.n; ++i) c += x(k, i);
    algebra_map.push_back({"unit[e" + std::to_string(k + 1) + "]", std::move(c)});
  }
  CertificateReport map_leg;
  map_leg.claim = "beta is an algebra map";
  for (auto& id : reduce_identities(algebra_map, *x.ambient, exec)) map_leg.add(std::move(id));
  map_leg.finalize();

  const auto semi = check_semi_magic(x, exec);
  const Verdict a = map_leg.verdict, s = semi.verdict;
  legs["algebra_map"] = to_string(a);
  legs["semi_magic"] = to_string(s);
  const bool inconclusive = a == Verdict::inconclusive || s == Verdict::inconclusive;
  const bool consistent = !inconclusive && a == s;
  legs["equivalence_consistent"] = consistent;
  report.add_fact("equivalence", "algebra map: " + to_string(a) + ", semi-magic: " + to_string(s), consistent,
                  inconclusive);
  if (map_leg.witness) legs["algebra_map_witness"] = *map_leg.witness;
  Json failed = Json::array();
  for (const auto& id : map_leg.identities)
    if (!id.holds) failed.push_back(id.label);
  if (!failed.empty()) legs["algebra_map_failed"] = std::move(failed);
  if (semi.witness) legs["semi_magic_witness"] = *semi.witness;
  report.details["n"] = x.n;
  report.details["legs"] = std::move(legs);
  report.finalize();
  return report;
}

CertificateReport verify_hopf_axioms(const HopfPresentation& hopf, int cap, Exec exec) {
  const auto& alpha = hopf.alphabet();
  const auto completion = complete_presentation(hopf.algebra, cap);
  const auto& sys = completion.system;
  const TensorEncoding& enc2 = *hopf.tensor2;
  const TensorEncoding enc3(alpha, 3);
  const auto t2 = tensor_power_system(sys, enc2);
  const auto t3 = tensor_power_system(sys, enc3);

  CertificateReport report;
  report.claim = std::string(hopf.has_antipode() ? "Hopf" : "bialgebra") + " axioms for " + hopf.algebra.name;

  std::vector<LabelledPoly> in_base, in_t2, in_t3;
  for (const auto& r : hopf.algebra.relations) {
    in_t2.push_back({"delta_well_defined[" + r.label + "]",
                     substitute<Rational>(r.poly, hopf.delta_images, MapDirection::homomorphism, enc2.tagged())});
    const Rational e = evaluate<Rational>(r.poly, hopf.counit_images);
    report.add_fact("counit_well_defined[" + r.label + "]", "eps(relation) = " + e.to_string(), e.is_zero());
    if (hopf.has_antipode())
      in_base.push_back({"antipode_well_defined[" + r.label + "]",
                         substitute<Rational>(r.poly, *hopf.antipode_images, MapDirection::antihomomorphism, alpha)});
  }

  const std::vector<NCPoly> base_ids = identity_images<Rational>(alpha);
  std::vector<NCPoly> delta_left, delta_right;  // delta images moved into factors (0,1) and (1,2)
  for (const auto& d : hopf.delta_images) {
    delta_left.push_back(relabel(d, enc2, enc3, 0));
    delta_right.push_back(relabel(d, enc2, enc3, 1));
  }
  std::vector<NCPoly> counit_polys;
  for (const auto& e : hopf.counit_images) counit_polys.push_back(NCPoly::constant(alpha, e));
  const MapDirection hom = MapDirection::homomorphism, anti = MapDirection::antihomomorphism;

  for (std::size_t g = 0; g < alpha->size(); ++g) {
    const std::string name = alpha->name(static_cast<Letter>(g));
    const NCPoly gen = NCPoly::generator(alpha, static_cast<Letter>(g));
    const NCPoly& d = hopf.delta_images[g];
    {
      const std::vector<NCPoly> left_maps[2] = {delta_left, embedded_generators(enc3, 2)};
      const std::vector<NCPoly> right_maps[2] = {embedded_generators(enc3, 0), delta_right};
      const MapDirection dirs[2] = {hom, hom};
      NCPoly diff = enc2.apply_factorwise<Rational>(d, left_maps, dirs, enc3.tagged()) -
                    enc2.apply_factorwise<Rational>(d, right_maps, dirs, enc3.tagged());
      in_t3.push_back({"coassociativity[" + name + "]", std::move(diff)});
    }
    {
      const std::vector<NCPoly> left_maps[2] = {counit_polys, base_ids};
      const std::vector<NCPoly> right_maps[2] = {base_ids, counit_polys};
      const MapDirection dirs[2] = {hom, hom};
      in_base.push_back({"counit_left[" + name + "]",
                         enc2.apply_factorwise<Rational>(d, left_maps, dirs, alpha) - gen});
      in_base.push_back({"counit_right[" + name + "]",
                         enc2.apply_factorwise<Rational>(d, right_maps, dirs, alpha) - gen});
    }
    if (hopf.has_antipode()) {
      const auto& s = *hopf.antipode_images;
      const NCPoly eps = NCPoly::constant(alpha, hopf.counit_images[g]);
      const std::vector<NCPoly> left_maps[2] = {s, base_ids};
      const std::vector<NCPoly> right_maps[2] = {base_ids, s};
      const MapDirection left_dirs[2] = {anti, hom}, right_dirs[2] = {hom, anti};
      in_base.push_back({"antipode_left[" + name + "]",
                         enc2.apply_factorwise<Rational>(d, left_maps, left_dirs, alpha) - eps});
      in_base.push_back({"antipode_right[" + name + "]",
                         enc2.apply_factorwise<Rational>(d, right_maps, right_dirs, alpha) - eps});
      const NCPoly twice = substitute<Rational>(substitute<Rational>(gen, s, anti, alpha), s, anti, alpha);
      in_base.push_back({"antipode_squared[" + name + "]", twice - gen});
    }
  }

  for (auto& id : reduce_identities(in_t2, t2, exec)) report.add(std::move(id));
  for (auto& id : reduce_identities(in_t3, t3, exec)) report.add(std::move(id));
  for (auto& id : reduce_identities(in_base, sys, exec)) report.add(std::move(id));
  if (!hopf.has_antipode()) report.notes.push_back("no antipode: bialgebra axioms only");
  report.details["n"] = hopf.n;
  report.details["cap"] = cap;
  report.details["relations"] = hopf.algebra.relations.size();
  report.details["completion"] = completion_json(completion);
  report.finalize();
  return report;
}

}  // namespace qperm
