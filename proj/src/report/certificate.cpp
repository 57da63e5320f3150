#include "qperm/report/certificate.hpp"

#include <sstream>

namespace qperm {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::refuted: return "refuted";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::refuted || b == Verdict::refuted) return Verdict::refuted;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
  return Verdict::verified;
}

void CertificateReport::finalize() {
  verdict = Verdict::verified;
  for (const auto& id : identities) {
    verdict = combine(verdict, id.verdict());
    if (!id.holds && !witness) {
      witness = id.label + ": " + id.expression;
      if (!id.normal_form.empty()) *witness += " -> " + id.normal_form;
    }
  }
}

std::size_t CertificateReport::failed_count() const {
  std::size_t n = 0;
  for (const auto& id : identities) n += id.holds ? 0 : 1;
  return n;
}

Json CertificateReport::to_json() const {
  Json j;
  j["claim"] = claim;
  j["verdict"] = to_string(verdict);
  j["identity_count"] = identities.size();
  j["failed_count"] = failed_count();
  Json ids = Json::array();
  for (const auto& id : identities) {
    Json e;
    e["label"] = id.label;
    e["expression"] = id.expression;
    if (!id.normal_form.empty()) e["normal_form"] = id.normal_form;
    e["holds"] = id.holds;
    e["inconclusive"] = id.inconclusive;
    ids.push_back(std::move(e));
  }
  j["identities"] = std::move(ids);
  if (witness) j["witness"] = *witness;
  j["notes"] = notes;
  j["details"] = details;
  return j;
}

std::string CertificateReport::to_text(bool verbose) const {
  std::ostringstream os;
  os << "[" << to_string(verdict) << "] " << claim << "\n";
  os << "  identities checked: " << identities.size() << ", failing: " << failed_count() << "\n";
  for (const auto& id : identities) {
    if (!verbose && id.holds) continue;
    os << "  " << (id.holds ? "ok   " : (id.inconclusive ? "???  " : "FAIL ")) << id.label << ": " << id.expression;
    if (!id.normal_form.empty()) os << "  =>  " << id.normal_form;
    os << "\n";
  }
  if (witness) os << "  witness: " << *witness << "\n";
  for (const auto& n : notes) os << "  note: " << n << "\n";
  return os.str();
}

}  // namespace qperm
