// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"
#include "qperm/gradings/classify.hpp"
#include "qperm/groups/function_on_sn.hpp"
#include "qperm/groups/subgroups.hpp"
#include "qperm/qperm/checks.hpp"
#include "qperm/qperm/identities.hpp"
#include "qperm/qperm/quotient.hpp"
#include "qperm/rewrite/filtration.hpp"

using namespace qperm;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

bool holds(const CertificateReport& r, const std::string& label) {
  for (const auto& id : r.identities)
    if (id.label == label) return id.holds && !id.inconclusive;
  return false;
}

std::shared_ptr<const RewriteSystem<Rational>> completed(const HopfPresentation& h) {
  return std::make_shared<const RewriteSystem<Rational>>(complete_presentation(h.algebra, 8).system);
}

Outcome dimension_counts() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    const auto r = complete_presentation(magic_presentation(n).algebra, 8);
    const auto dims = filtration_dimension(r.system, 8);
    o.require(r.status.is_confluent(), "magic n=" + std::to_string(n) + " not confluent at cap 8");
    o.require(static_cast<long>(dims.back()) == oracle::factorial(n),
              "basis size " + std::to_string(dims.back()) + " != n! for n=" + std::to_string(n));
    const auto iso = pi_n_isomorphism_check(n);
    o.require(holds(iso, "basis_count") && holds(iso, "evaluation_rank"),
              "evaluation rank check failed for n=" + std::to_string(n));
  }
  o.detail = o.pass ? "quotient bases 1, 2, 6; evaluation ranks n!" : o.detail;
  return o;
}

Outcome noncommutative_infinite() {
  Outcome o;
  const auto w = idempotent_block_matrix(4);
  o.require(check_magic(w).verdict == Verdict::verified, "block matrix is not magic");
  const auto r = block_witness(4, 10);
  o.require(r.verdict == Verdict::verified, "witness report not verified");
  const auto& a = w.alphabet();
  const NCPoly p = NCPoly::generator(a, a->index("p")), q = NCPoly::generator(a, a->index("q"));
  const auto image = w.ambient->normal_form(w(0, 0) * w(2, 2) - w(2, 2) * w(0, 0));
  o.require(image == p * q - q * p, "commutator image is " + image.to_string());
  std::vector<std::uint64_t> dims;
  for (const auto& d : r.details["filtration_dimensions"]) dims.push_back(d.get<std::uint64_t>());
  o.require(dims == oracle::alternating_word_dimensions(10), "filtration dimensions differ from 2d+1");
  if (o.pass) o.detail = "image of [u11,u33] is pq - qp; dimensions 1,3,...,21";
  return o;
}

Outcome gram_diagonal() {
  Outcome o;
  for (int n = 1; n <= 5; ++n)
    o.require(derive_gram_diagonal(n, 8).verdict == Verdict::verified, "n=" + std::to_string(n));
  if (o.pass) o.detail = "x^t x = diag(u_i) for n = 1..5";
  return o;
}

Outcome transpose_inverse() {
  using F = RelationFamily;
  const std::vector<std::vector<F>> subsets{{F::row_orthogonality, F::row_sum, F::column_orthogonality},
                                            {F::row_sum, F::column_orthogonality, F::column_sum},
                                            {F::row_orthogonality, F::row_sum, F::column_sum},
                                            {F::row_orthogonality, F::column_orthogonality, F::column_sum}};
  Outcome o;
  for (int n = 2; n <= 4; ++n)
    for (std::size_t s = 0; s < subsets.size(); ++s)
      o.require(derive_transpose_inverse(n, subsets[s], 8).verdict == Verdict::verified,
                "n=" + std::to_string(n) + " subset " + std::to_string(s));
  if (o.pass) o.detail = "all four family triples, n = 2..4";
  return o;
}

Outcome hopf_axioms() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    const auto r = verify_hopf_axioms(magic_presentation(n), 8);
    o.require(r.verdict == Verdict::verified, "n=" + std::to_string(n) + ": " + r.witness.value_or("?"));
    for (const char* kind : {"delta_well_defined", "counit_well_defined", "antipode_well_defined", "coassociativity",
                             "counit_left", "counit_right", "antipode_left", "antipode_right", "antipode_squared"}) {
      const bool present = std::any_of(r.identities.begin(), r.identities.end(),
                                       [&](const CheckedIdentity& id) { return id.label.rfind(kind, 0) == 0; });
      o.require(present, std::string(kind) + " missing for n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = "n = 1..4 at cap 8, S^2 = id on generators";
  return o;
}

Outcome algebra_map_equivalence() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    const auto h = magic_presentation(n);
    const auto r = coaction_algebra_map_check(generating_matrix(h, completed(h)), &h);
    o.require(r.verdict == Verdict::verified && r.details["legs"]["algebra_map"] == "verified",
              "generating matrix n=" + std::to_string(n));
  }
  const auto z2 = group_algebra_presentation();
  const NCPoly g = NCPoly::generator(z2.alphabet(), 0), zero(z2.alphabet());
  const MatrixOverAlgebra diag{2, {g, zero, zero, g}, completed(z2)};
  const auto bad = coaction_algebra_map_check(diag, &z2);
  const auto& legs = bad.details["legs"];
  o.require(legs["multiplicative"] == "verified", "diag(g,g) should be multiplicative");
  o.require(legs["algebra_map"] == "refuted" && legs["semi_magic"] == "refuted", "diag(g,g) legs not both refuted");
  o.require(legs["equivalence_consistent"] == true, "legs inconsistent");
  const auto& failed = legs["algebra_map_failed"];
  o.require(std::find(failed.begin(), failed.end(), "unit[e1]") != failed.end(), "unit preservation not refuted");
  if (o.pass) o.detail = "generating matrices n = 1..4; diag(g,g) fails both legs";
  return o;
}

Outcome pi_n_suite() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    const auto r = pi_n_isomorphism_check(n);
    o.require(holds(r, "relations_vanish"), "relations n=" + std::to_string(n));
    o.require(holds(r, "surjective"), "surjective n=" + std::to_string(n));
    const auto e = e_sigma_product_check(n);
    o.require(e.verdict == Verdict::verified &&
                  static_cast<long>(e.identities.size()) == oracle::factorial(n),
              "e_sigma product n=" + std::to_string(n));
  }
  const auto r4 = pi_n_isomorphism_check(4);
  o.require(holds(r4, "kernel_pi_image") && holds(r4, "kernel_nonzero"), "kernel witness at n=4");
  if (o.pass) o.detail = "relations vanish and e_sigma formula for n <= 5; kernel witness at n = 4";
  return o;
}

Outcome grading_law() {
  Outcome o;
  int groups = 0;
  for (unsigned n = 1; n <= 8; ++n)
    for (const auto& g : abelian_groups_of_order(n)) {
      ++groups;
      const auto table = character_table(g);
      const auto elems = g.elements();
      for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = 0; b < elems.size(); ++b) {
          const auto ab = g.index_of(g.add(elems[a], elems[b]));
          for (std::size_t x = 0; x < elems.size(); ++x)
            o.require(table[a][x] * table[b][x] == table[ab][x], "f_chi f_psi != f_chipsi in " + g.to_string());
        }
      o.require(verify_grading(grading_from_regular_abelian(g)).verdict == Verdict::verified,
                "grading not verified for " + g.to_string());
    }
  if (o.pass) o.detail = std::to_string(groups) + " groups of order <= 8, exact";
  return o;
}

Outcome classification_counts() {
  Outcome o;
  const std::vector<std::pair<int, std::size_t>> expected{{4, 2}, {5, 1}, {6, 1}, {8, 3}};
  for (const auto& [n, count] : expected) {
    const auto c = classify_gradings(n, true);
    o.require(c.ergodic.size() == count && static_cast<long>(count) == oracle::abelian_group_count(n),
              "ergodic count n=" + std::to_string(n) + " is " + std::to_string(c.ergodic.size()));
  }
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::vector<std::size_t>> a, b;
    for (const auto& g : transitive_abelian_subgroups(n, SubgroupMode::classified)) a.push_back(conjugacy_key(n, g.elements));
    for (const auto& g : transitive_abelian_subgroups(n, SubgroupMode::brute_force)) b.push_back(conjugacy_key(n, g.elements));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    o.require(a == b, "classified list differs from brute force at n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "ergodic 2, 1, 1, 3 for n = 4, 5, 6, 8; brute force agrees for n <= 6";
  return o;
}

Outcome orbit_round_trip() {
  Outcome o;
  int cases = 0;
  for (int n = 1; n <= 6; ++n) {
    const auto c = classify_gradings(n);
    o.require(static_cast<long>(c.general.size()) == oracle::grading_choice_count(n),
              "grading count n=" + std::to_string(n));
    for (const auto& part : oracle::partitions(n)) {
      std::vector<std::vector<FiniteAbelianGroup>> choices{{}};
      for (int m : part) {
        std::vector<std::vector<FiniteAbelianGroup>> next;
        for (const auto& prefix : choices)
          for (const auto& h : abelian_groups_of_order(static_cast<unsigned>(m))) {
            next.push_back(prefix);
            next.back().push_back(h);
          }
        choices = std::move(next);
      }
      for (const auto& groups : choices) {
        ++cases;
        const auto g = grading_from_partition(part, groups);
        const auto orbits = orbit_decompose(g);
        o.require(orbits.partition == part, "partition not recovered");
        o.require(orbits.k == static_cast<int>(g.identity_component().size()), "k != dim A_1");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " (partition, group) cases for n <= 6";
  return o;
}

std::vector<std::vector<std::string>> cli_suite() {
  const std::string data = QPERM_TEST_DATA;
  return {
      {"present", "--n", "3"},
      {"present", "--n", "2", "--semi"},
      {"verify-hopf", "--n", "3", "--cap", "8"},
      {"lemma36", "--n", "4", "--families", "1,2,3"},
      {"lemma37", "--n", "5"},
      {"coaction", "--n", "3"},
      {"coaction", "--example", "diag-g"},
      {"pi-n", "--n", "4"},
      {"iso-check", "--n", "4"},
      {"wang", "--n", "4", "--depth", "10"},
      {"subgroups", "--n", "6", "--mode", "brute_force"},
      {"classify", "--n", "6", "--cross-check"},
      {"classify", "--n", "8", "--ergodic-only"},
      {"grade", "--blocks", "3,2", "--groups", "Z3,Z2"},
      {"orbit-decompose", "--input", data + "/z3_z2.grading"},
      {"verify-grading", "--input", data + "/z4.grading"},
      {"verify-grading", "--input", data + "/broken.grading"},
  };
}

int expected_exit(const std::vector<std::string>& cmd) {
  return cmd.back().find("broken") != std::string::npos ? 1 : 0;
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

Outcome cli_determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / ("qperm_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto suite = cli_suite();
  std::vector<std::string> first;
  for (int round = 0; round < 2; ++round) {
    for (std::size_t i = 0; i < suite.size(); ++i) {
      const auto file = dir / (std::to_string(round) + "_" + std::to_string(i) + ".json");
      std::string cmd = shell_quote(QPERM_CLI_PATH) + " --output " + shell_quote(file.string());
      for (const auto& a : suite[i]) cmd += " " + shell_quote(a);
      cmd += " > /dev/null 2>&1";
      const int status = std::system(cmd.c_str());
      const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
      o.require(code == expected_exit(suite[i]), suite[i].front() + " exited " + std::to_string(code));
      std::ifstream in(file);
      nlohmann::ordered_json j = nlohmann::ordered_json::parse(in, nullptr, false);
      o.require(!j.is_discarded(), "unreadable report for " + suite[i].front());
      if (j.is_discarded()) continue;
      o.require(j["exit_code"] == code, "exit code field mismatch for " + suite[i].front());
      j.erase("wall_time_ms");
      const std::string text = j.dump(2);
      if (round == 0)
        first.push_back(text);
      else
        o.require(text == first[i], "reports differ for " + suite[i].front());
    }
  }
  std::filesystem::remove_all(dir);
  if (o.pass) o.detail = std::to_string(suite.size()) + " commands, byte-identical reports across two runs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"dimension counts", dimension_counts},
      {"noncommutative and infinite-dimensional at n = 4", noncommutative_infinite},
      {"x^t x = diag(u_i) over semi-magic", gram_diagonal},
      {"x x^t = I from three families", transpose_inverse},
      {"Hopf axiom suite", hopf_axioms},
      {"algebra map iff semi-magic", algebra_map_equivalence},
      {"pi_n suite", pi_n_suite},
      {"grading law", grading_law},
      {"classification counts", classification_counts},
      {"orbit decomposition round trip", orbit_round_trip},
      {"CLI determinism", cli_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1 < 10 ? " " : "") << i + 1 << "  " << criteria[i].first
              << ": " << o.detail << " (" << static_cast<long>(ms) << " ms)" << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
