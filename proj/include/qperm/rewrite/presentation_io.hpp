#pragma once

#include <istream>
#include <string>
#include <vector>

#include "qperm/ncalg/parse.hpp"
#include "qperm/rewrite/completion.hpp"
#include "qperm/report/certificate.hpp"

namespace qperm {

// Presentation file
//
//   # comment
//   alphabet p q
//   order deglex
//   field Q            (or Q(z5) for cyclotomic coefficients)
//   p.p - p
//   q.q - q
//
// Every line after the header is one relation polynomial (see parse.hpp).

struct PresentationText {
  AlphabetPtr alphabet;
  MonomialOrder order = MonomialOrder::deglex;
  /// 1 means Q, m > 1 means Q(zeta_m).
  unsigned field_order = 1;
  std::vector<std::string> relations;
};

/// Throws std::invalid_argument with a line number on malformed input.
PresentationText read_presentation(std::istream& in);
PresentationText read_presentation_file(const std::string& path);

/// Relations over Q; throws if the file declares a cyclotomic field or a
/// relation uses cyclotomic coefficients.
std::vector<NCPoly> rational_relations(const PresentationText& text);
std::vector<CycloPoly> cyclotomic_relations(const PresentationText& text);

template <ExactField C>
std::string write_presentation(const AlphabetPtr& alphabet, MonomialOrder order, unsigned field_order,
                               const std::vector<Poly<C>>& relations) {
  std::string out = "alphabet";
  for (const auto& name : alphabet->names()) out += " " + name;
  out += "\norder " + to_string(order) + "\nfield ";
  out += field_order == 1 ? std::string("Q") : "Q(z" + std::to_string(field_order) + ")";
  out += "\n";
  for (const auto& r : relations) out += r.to_string() + "\n";
  return out;
}

/// Status, rule counts and the irreducible words up to `basis_degree`
/// (omitted when there are more than `basis_limit`).
template <ExactField C>
Json completion_report(const CompletionResult<C>& result, int basis_degree, std::size_t basis_limit = 200) {
  const auto& sys = result.system;
  Json j;
  j["status"] = result.status.to_string();
  j["degree_cap"] = result.degree_cap;
  j["rule_count"] = sys.rule_count();
  j["rule_count_history"] = result.rule_count_history;
  j["pairs_resolved"] = result.pairs_resolved;
  j["pairs_deferred"] = result.pairs_deferred;
  Json rules = Json::array();
  for (const auto* rule : sys.rules())
    rules.push_back(rule->lhs.to_string(*sys.alphabet()) + " -> " + rule->rhs.to_string());
  j["rules"] = std::move(rules);
  j["irreducible_counts_by_length"] = sys.index().count_irreducible(static_cast<std::size_t>(basis_degree));
  try {
    Json words = Json::array();
    for (const auto& w : sys.index().irreducible_words(static_cast<std::size_t>(basis_degree), basis_limit))
      words.push_back(w.to_string(*sys.alphabet()));
    j["basis_words"] = std::move(words);
  } catch (const std::length_error&) {
    j["basis_words"] = "more than " + std::to_string(basis_limit) + " words";
  }
  return j;
}

}  // namespace qperm
