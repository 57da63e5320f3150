#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qperm {

using Json = nlohmann::ordered_json;

enum class Verdict { verified, refuted, inconclusive };

std::string to_string(Verdict v);

/// Combination rule shared by every report: any refutation wins, then any
/// inconclusive part, otherwise verified.
Verdict combine(Verdict a, Verdict b);

/// One machine-checked statement. For polynomial identities `expression` is
/// the polynomial that must vanish and `normal_form` its reduction; for
/// other facts `expression` describes the fact and `normal_form` is empty.
struct CheckedIdentity {
  std::string label;
  std::string expression;
  std::string normal_form;
  bool holds = false;
  bool inconclusive = false;

  Verdict verdict() const {
    if (holds) return Verdict::verified;
    return inconclusive ? Verdict::inconclusive : Verdict::refuted;
  }
};

/// Outcome of one verifier run. The verdict is recomputed from the checked
/// identities by `finalize`: verified only if every identity holds and none
/// is inconclusive.
struct CertificateReport {
  std::string claim;
  std::vector<CheckedIdentity> identities;
  Verdict verdict = Verdict::inconclusive;
  std::vector<std::string> notes;
  std::optional<std::string> witness;
  Json details = Json::object();

  void add(CheckedIdentity identity) { identities.push_back(std::move(identity)); }
  void add_fact(std::string label, std::string statement, bool holds, bool inconclusive = false) {
    identities.push_back(CheckedIdentity{std::move(label), std::move(statement), "", holds, inconclusive});
  }
  /// Sets the verdict from the identities and records the first failing one
  /// as witness when none was set.
  void finalize();

  std::size_t failed_count() const;

  Json to_json() const;
  /// Human-readable summary; `verbose` lists every identity.
  std::string to_text(bool verbose = false) const;
};

}  // namespace qperm
