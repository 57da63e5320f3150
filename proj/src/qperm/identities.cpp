#include "qperm/qperm/identities.hpp"

#include <algorithm>
#include <stdexcept>

namespace qperm {

namespace {

std::string entry_label(const char* stem, int i, int j) {
  return std::string(stem) + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
}

bool has(const std::vector<RelationFamily>& fs, RelationFamily f) {
  return std::find(fs.begin(), fs.end(), f) != fs.end();
}

}  // namespace

CertificateReport derive_transpose_inverse(int n, const std::vector<RelationFamily>& families, int cap, Exec exec) {
  if (n < 1) throw std::invalid_argument("matrix size must be at least 1");
  std::vector<RelationFamily> fs = families;
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  if (fs.size() != 3) throw std::invalid_argument("exactly three distinct relation families are required");

  const bool row_form = has(fs, RelationFamily::row_sum) && has(fs, RelationFamily::column_orthogonality);
  AlgebraPresentation algebra;
  algebra.alphabet = matrix_alphabet("x", n);
  std::string family_names;
  for (auto f : fs) {
    family_names += (family_names.empty() ? "" : ", ") + to_string(f);
    for (auto& r : family_instances(algebra.alphabet, n, f)) algebra.relations.push_back(std::move(r));
  }
  algebra.name = "generic matrix with " + family_names;
  const auto completion = complete_presentation(algebra, cap);

  auto x = [&](int i, int j) { return NCPoly::generator(algebra.alphabet, static_cast<Letter>(i * n + j)); };
  std::vector<LabelledPoly> entries;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      NCPoly e(algebra.alphabet);
      for (int k = 0; k < n; ++k) e += row_form ? x(i, k) * x(j, k) : x(k, i) * x(k, j);
      if (i == j) e -= NCPoly::one(algebra.alphabet);
      entries.push_back({entry_label(row_form ? "x.x^t-I" : "x^t.x-I", i, j), std::move(e)});
    }

  CertificateReport report;
  report.claim = std::string(row_form ? "x.x^t = I" : "x^t.x = I") + " follows from " + family_names;
  for (auto& id : reduce_identities(entries, completion.system, exec)) report.add(std::move(id));
  report.notes.push_back("machine-checked: the entry-wise identity only; recovering the fourth family from "
                         "invertibility of x is not checked here");
  report.details["n"] = n;
  report.details["families"] = family_names;
  report.details["identity"] = row_form ? "x.x^t = I" : "x^t.x = I";
  report.details["completion"] = {{"status", completion.status.to_string()},
                                  {"rule_count", completion.system.rule_count()}};
  report.finalize();
  return report;
}

CertificateReport derive_gram_diagonal(int n, int cap, Exec exec) {
  if (n < 1) throw std::invalid_argument("matrix size must be at least 1");
  AlgebraPresentation algebra;
  algebra.name = "semi-magic matrix x";
  algebra.alphabet = matrix_alphabet("x", n);
  for (auto f : {RelationFamily::row_orthogonality, RelationFamily::row_sum})
    for (auto& r : family_instances(algebra.alphabet, n, f)) algebra.relations.push_back(std::move(r));
  const auto completion = complete_presentation(algebra, cap);

  auto x = [&](int i, int j) { return NCPoly::generator(algebra.alphabet, static_cast<Letter>(i * n + j)); };
  std::vector<LabelledPoly> entries;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      NCPoly e(algebra.alphabet);
      for (int k = 0; k < n; ++k) {
        e += x(k, i) * x(k, j);
        if (i == j) e -= x(k, i);
      }
      entries.push_back({entry_label("x^t.x-diag(u)", i, j), std::move(e)});
    }

  CertificateReport report;
  report.claim = "x^t.x = diag(u_1, ..., u_n) with u_i = sum_k x_ki for semi-magic x";
  for (auto& id : reduce_identities(entries, completion.system, exec)) report.add(std::move(id));
  report.details["n"] = n;
  report.details["completion"] = {{"status", completion.status.to_string()},
                                  {"rule_count", completion.system.rule_count()}};
  report.finalize();
  return report;
}

}  // namespace qperm
