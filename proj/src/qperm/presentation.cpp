#include "qperm/qperm/presentation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace qperm {

namespace {

std::string idx(int i) { return std::to_string(i + 1); }

const char* family_stem(RelationFamily f) {
  switch (f) {
    case RelationFamily::row_orthogonality: return "row_orthogonality";
    case RelationFamily::row_sum: return "row_sum";
    case RelationFamily::column_orthogonality: return "column_orthogonality";
    case RelationFamily::column_sum: return "column_sum";
  }
  return "?";
}

std::vector<LabelledPoly> instances(int n, const AlphabetPtr& alphabet,
                                    const std::function<NCPoly(int, int)>& entry, RelationFamily family) {
  std::vector<LabelledPoly> out;
  const NCPoly one = NCPoly::one(alphabet);
  const std::string stem = family_stem(family);
  switch (family) {
    case RelationFamily::row_orthogonality:
    case RelationFamily::column_orthogonality: {
      const bool rows = family == RelationFamily::row_orthogonality;
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            const NCPoly a = rows ? entry(k, i) : entry(i, k);
            const NCPoly b = rows ? entry(k, j) : entry(j, k);
            NCPoly rel = a * b;
            if (i == j) rel -= a;
            out.push_back({stem + "[k=" + idx(k) + ",i=" + idx(i) + ",j=" + idx(j) + "]", std::move(rel)});
          }
      break;
    }
    case RelationFamily::row_sum:
    case RelationFamily::column_sum: {
      const bool rows = family == RelationFamily::row_sum;
      for (int i = 0; i < n; ++i) {
        NCPoly rel = -one;
        for (int k = 0; k < n; ++k) rel += rows ? entry(i, k) : entry(k, i);
        out.push_back({stem + "[" + idx(i) + "]", std::move(rel)});
      }
      break;
    }
  }
  return out;
}

HopfPresentation matrix_presentation(int n, bool magic) {
  if (n < 1) throw std::invalid_argument("matrix size must be at least 1");
  HopfPresentation h;
  h.n = n;
  h.algebra.name = std::string(magic ? "A_s" : "semi-magic bialgebra") + "(" + std::to_string(n) + ")";
  h.algebra.alphabet = matrix_alphabet("u", n);
  const auto& alpha = h.algebra.alphabet;
  std::vector<RelationFamily> families{RelationFamily::row_orthogonality, RelationFamily::row_sum};
  if (magic) {
    families.push_back(RelationFamily::column_orthogonality);
    families.push_back(RelationFamily::column_sum);
  }
  for (auto f : families)
    for (auto& r : family_instances(alpha, n, f)) h.algebra.relations.push_back(std::move(r));

  h.tensor2 = std::make_shared<const TensorEncoding>(alpha, 2);
  auto u = [&](int i, int j) { return NCPoly::generator(alpha, static_cast<Letter>(i * n + j)); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      NCPoly d(h.tensor2->tagged());
      for (int k = 0; k < n; ++k) {
        const NCPoly parts[2] = {u(i, k), u(k, j)};
        d += h.tensor2->pure_tensor<Rational>(parts);
      }
      h.delta_images.push_back(std::move(d));
      h.counit_images.emplace_back(i == j ? 1 : 0);
    }
  if (magic) {
    std::vector<NCPoly> s;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s.push_back(u(j, i));
    h.antipode_images = std::move(s);
  }
  return h;
}

}  // namespace

std::string to_string(RelationFamily f) { return family_stem(f); }

RelationFamily parse_relation_family(const std::string& text) {
  for (int k = 1; k <= 4; ++k) {
    const auto f = static_cast<RelationFamily>(k);
    if (text == std::to_string(k) || text == family_stem(f)) return f;
  }
  throw std::invalid_argument("unknown relation family '" + text + "' (use 1-4 or a family name)");
}

std::string matrix_generator_name(const std::string& stem, int n, int i, int j) {
  return stem + idx(i) + (n > 9 ? "_" : "") + idx(j);
}

AlphabetPtr matrix_alphabet(const std::string& stem, int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) names.push_back(matrix_generator_name(stem, n, i, j));
  return make_alphabet(std::move(names));
}

void MatrixOverAlgebra::validate() const {
  if (!ambient) throw std::invalid_argument("matrix has no ambient algebra");
  if (entries.size() != static_cast<std::size_t>(n * n)) throw std::invalid_argument("matrix needs n*n entries");
  for (const auto& e : entries)
    if (e.alphabet() && !same_alphabet(e.alphabet(), ambient->alphabet()))
      throw std::invalid_argument("matrix entry over a foreign alphabet");
}

std::vector<LabelledPoly> family_instances(const MatrixOverAlgebra& x, RelationFamily family) {
  x.validate();
  return instances(x.n, x.alphabet(), [&](int i, int j) { return x(i, j); }, family);
}

std::vector<LabelledPoly> family_instances(const AlphabetPtr& alphabet, int n, RelationFamily family) {
  if (alphabet->size() != static_cast<std::size_t>(n * n))
    throw std::invalid_argument("alphabet is not an n x n matrix of generators");
  return instances(
      n, alphabet, [&](int i, int j) { return NCPoly::generator(alphabet, static_cast<Letter>(i * n + j)); },
      family);
}

std::vector<NCPoly> AlgebraPresentation::relation_polys() const {
  std::vector<NCPoly> out;
  out.reserve(relations.size());
  for (const auto& r : relations) out.push_back(r.poly);
  return out;
}

RewriteSystem<Rational> AlgebraPresentation::raw_system() const {
  const auto polys = relation_polys();
  return RewriteSystem<Rational>::from_relations(alphabet, polys);
}

CompletionResult<Rational> complete_presentation(const AlgebraPresentation& algebra, int cap) {
  auto raw = algebra.raw_system();
  return complete(raw, std::max(cap, raw.max_rule_degree()));
}

HopfPresentation magic_presentation(int n) { return matrix_presentation(n, true); }

HopfPresentation semi_magic_presentation(int n) { return matrix_presentation(n, false); }

HopfPresentation group_algebra_presentation() {
  HopfPresentation h;
  h.algebra.name = "K[Z2]";
  h.algebra.alphabet = make_alphabet({"g"});
  const auto& alpha = h.algebra.alphabet;
  const NCPoly g = NCPoly::generator(alpha, 0);
  h.algebra.relations.push_back({"involution", g * g - NCPoly::one(alpha)});
  h.tensor2 = std::make_shared<const TensorEncoding>(alpha, 2);
  const NCPoly parts[2] = {g, g};
  h.delta_images.push_back(h.tensor2->pure_tensor<Rational>(parts));
  h.counit_images.emplace_back(1);
  h.antipode_images = std::vector<NCPoly>{g};
  return h;
}

HopfPresentation trivial_presentation() {
  HopfPresentation h;
  h.algebra.name = "K";
  h.algebra.alphabet = make_alphabet({});
  h.tensor2 = std::make_shared<const TensorEncoding>(h.algebra.alphabet, 2);
  h.antipode_images = std::vector<NCPoly>{};
  return h;
}

AlgebraPresentation idempotent_pair_algebra() {
  AlgebraPresentation a;
  a.name = "<p, q | p^2 = p, q^2 = q>";
  a.alphabet = make_alphabet({"p", "q"});
  const NCPoly p = NCPoly::generator(a.alphabet, 0), q = NCPoly::generator(a.alphabet, 1);
  a.relations.push_back({"idempotent[p]", p * p - p});
  a.relations.push_back({"idempotent[q]", q * q - q});
  return a;
}

MatrixOverAlgebra generating_matrix(const HopfPresentation& hopf, std::shared_ptr<const RewriteSystem<Rational>> ambient) {
  if (hopf.n < 1) throw std::invalid_argument(hopf.algebra.name + " is not generated by a matrix");
  MatrixOverAlgebra x;
  x.n = hopf.n;
  x.ambient = std::move(ambient);
  for (std::size_t g = 0; g < hopf.alphabet()->size(); ++g)
    x.entries.push_back(NCPoly::generator(hopf.alphabet(), static_cast<Letter>(g)));
  x.validate();
  return x;
}

Json relation_summary(const AlgebraPresentation& algebra) {
  std::map<std::string, std::size_t> counts;
  for (const auto& r : algebra.relations) ++counts[r.label.substr(0, r.label.find('['))];
  Json j = Json::object();
  for (const auto& [k, v] : counts) j[k] = v;
  return j;
}

}  // namespace qperm
