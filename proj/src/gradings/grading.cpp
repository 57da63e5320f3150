#include "qperm/gradings/grading.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qperm {

namespace {

CycloVec pointwise(const CycloVec& a, const CycloVec& b) {
  CycloVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

std::string vector_to_string(const CycloVec& v, unsigned field) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].embed(field).to_expression();
  return out + ")";
}

unsigned grading_field(const Grading& g) {
  unsigned m = g.group.field_order();
  for (const auto& c : g.components)
    for (const auto& v : c.basis)
      for (const auto& x : v) m = std::lcm(m, x.order());
  return m;
}

void sort_components(Grading& g) {
  std::sort(g.components.begin(), g.components.end(),
            [](const GradingComponent& a, const GradingComponent& b) { return a.label < b.label; });
}

std::vector<CycloVec> character_vectors(const FiniteAbelianGroup& group) {
  const auto elems = group.elements();
  std::vector<CycloVec> out;
  for (const auto& c : elems) {
    Character chi{group, c};
    CycloVec v;
    for (const auto& g : elems) v.push_back(chi(g));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

const std::vector<CycloVec>& Grading::component(const GroupWord& g) const {
  static const std::vector<CycloVec> empty;
  for (const auto& c : components)
    if (c.label == g) return c.basis;
  return empty;
}

std::vector<GroupWord> Grading::support() const {
  std::vector<GroupWord> out;
  for (const auto& c : components)
    if (!c.basis.empty()) out.push_back(c.label);
  return out;
}

Json Grading::to_json() const {
  const unsigned field = grading_field(*this);
  Json j;
  j["n"] = n;
  j["group"] = group.to_string();
  j["field"] = "Q(z" + std::to_string(field) + ")";
  if (!group.block_sizes().empty()) j["blocks"] = group.block_sizes();
  Json comps = Json::array();
  for (const auto& c : components) {
    Json basis = Json::array();
    for (const auto& v : c.basis) basis.push_back(vector_to_string(v, field));
    comps.push_back({{"label", group.element_to_string(c.label)}, {"basis", std::move(basis)}});
  }
  j["components"] = std::move(comps);
  return j;
}

Grading grading_from_regular_abelian(const FiniteAbelianGroup& g) {
  Grading out;
  out.n = static_cast<int>(g.order());
  out.group = GradingGroup::abelian(g);
  const auto elems = g.elements();
  const auto vectors = character_vectors(g);
  for (std::size_t c = 0; c < elems.size(); ++c)
    out.components.push_back({out.group.letter(0, elems[c]), {vectors[c]}});
  sort_components(out);
  return out;
}

Grading grading_from_partition(const std::vector<int>& blocks, const std::vector<FiniteAbelianGroup>& groups) {
  if (blocks.empty()) throw std::invalid_argument("partition has no blocks");
  if (blocks.size() != groups.size()) throw std::invalid_argument("one group per block is required");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i] < 1) throw std::invalid_argument("block sizes must be positive");
    if (i > 0 && blocks[i] > blocks[i - 1]) throw std::invalid_argument("block sizes must be nonincreasing");
    if (groups[i].order() != static_cast<unsigned>(blocks[i]))
      throw std::invalid_argument("group " + groups[i].to_string() + " has order " +
                                  std::to_string(groups[i].order()) + ", block size is " + std::to_string(blocks[i]));
  }
  Grading out;
  for (int b : blocks) out.n += b;
  out.group = GradingGroup(groups, blocks);
  std::map<GroupWord, std::vector<CycloVec>> comps;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto elems = groups[i].elements();
    const auto vectors = character_vectors(groups[i]);
    for (std::size_t c = 0; c < elems.size(); ++c) {
      CycloVec v(static_cast<std::size_t>(out.n), Cyclotomic(0));
      for (std::size_t x = 0; x < vectors[c].size(); ++x) v[offset + x] = vectors[c][x];
      comps[out.group.letter(static_cast<unsigned>(i), elems[c])].push_back(std::move(v));
    }
    offset += static_cast<std::size_t>(blocks[i]);
  }
  for (auto& [label, basis] : comps) out.components.push_back({label, std::move(basis)});
  return out;
}

Grading trivial_grading(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  Grading out;
  out.n = n;
  std::vector<CycloVec> basis;
  for (int i = 0; i < n; ++i) {
    CycloVec v(static_cast<std::size_t>(n), Cyclotomic(0));
    v[static_cast<std::size_t>(i)] = Cyclotomic(1);
    basis.push_back(std::move(v));
  }
  out.components.push_back({GroupWord{}, std::move(basis)});
  return out;
}

CertificateReport verify_grading(const Grading& grading, Exec exec) {
  const auto& group = grading.group;
  const std::size_t n = static_cast<std::size_t>(grading.n);
  CertificateReport report;
  report.claim = "components form a faithful " + group.to_string() + "-grading of K^" + std::to_string(n);

  std::vector<CycloVec> all;
  bool shapes_ok = true;
  std::set<GroupWord> labels;
  for (const auto& c : grading.components) {
    if (!labels.insert(c.label).second) shapes_ok = false;
    for (const auto& v : c.basis) {
      if (v.size() != n) shapes_ok = false;
      all.push_back(v);
    }
  }
  report.add_fact("well_formed", "labels distinct and every vector has " + std::to_string(n) + " coordinates",
                  shapes_ok);
  if (!shapes_ok) {
    report.finalize();
    return report;
  }
  const std::size_t r = rank(all);
  report.add_fact("direct_sum", std::to_string(all.size()) + " basis vectors of rank " + std::to_string(r) +
                                    " in dimension " + std::to_string(n),
                  all.size() == n && r == n);

  // Grading law: one reduced basis per component, products tested by residue.
  std::vector<std::vector<CycloVec>> reduced;
  for (const auto& c : grading.components) reduced.push_back(row_reduce(c.basis));
  auto target_of = [&](const GroupWord& g) -> const std::vector<CycloVec>* {
    for (std::size_t i = 0; i < grading.components.size(); ++i)
      if (grading.components[i].label == g) return &reduced[i];
    return nullptr;
  };
  const std::size_t m = grading.components.size();
  std::vector<std::string> failures(m * m);
  auto check_pair = [&](std::size_t idx) {
    const auto& a = grading.components[idx / m];
    const auto& b = grading.components[idx % m];
    const GroupWord gh = group.multiply(a.label, b.label);
    const auto* target = target_of(gh);
    for (const auto& u : a.basis)
      for (const auto& v : b.basis) {
        const CycloVec w = pointwise(u, v);
        if (is_zero_vector(w)) continue;
        if (target && is_zero_vector(residue(*target, w))) continue;
        failures[idx] = "(" + group.element_to_string(a.label) + ", " + group.element_to_string(b.label) + ", " +
                        vector_to_string(w, grading_field(grading)) + ")";
        return;
      }
  };
  if (exec == Exec::serial) {
    for (std::size_t idx = 0; idx < m * m; ++idx) check_pair(idx);
  } else {
    const auto count = static_cast<long>(m * m);
#pragma omp parallel for schedule(dynamic, 1)
    for (long idx = 0; idx < count; ++idx) check_pair(static_cast<std::size_t>(idx));
  }
  std::string first_failure;
  for (const auto& f : failures)
    if (!f.empty()) {
      first_failure = f;
      break;
    }
  report.add_fact("grading_law", first_failure.empty() ? "A_g A_h lies in A_gh for all pairs"
                                                       : "product escapes its component: " + first_failure,
                  first_failure.empty());
  if (!first_failure.empty()) report.witness = first_failure;

  const auto support = grading.support();
  const auto generated = group.generated_by(support);
  report.add_fact("faithful", "support generates " + group.to_string(), generated.value_or(false),
                  !generated.has_value());

  bool finite = true;
  for (const auto& g : support) finite = finite && group.order(g).has_value();
  report.add_fact("finite_order", "every g with A_g nonzero has finite order", finite);

  const std::size_t dim1 = rank(grading.identity_component());
  const bool ergodic = dim1 == 1;
  report.add_fact("ergodic_abelian", ergodic ? "ergodic grading over an abelian group" : "not ergodic",
                  !ergodic || group.is_abelian());

  const CycloVec ones(n, Cyclotomic(1));
  report.add_fact("unit_in_identity_component", "1 lies in A_1",
                  in_span(grading.identity_component(), ones));

  report.details["n"] = grading.n;
  report.details["group"] = group.to_string();
  report.details["ergodic"] = ergodic;
  report.details["dim_identity_component"] = dim1;
  Json sup = Json::array();
  for (const auto& g : support) sup.push_back(group.element_to_string(g));
  report.details["support"] = std::move(sup);
  report.finalize();
  return report;
}

Json OrbitReport::to_json() const {
  Json j;
  j["partition"] = partition;
  j["k"] = k;
  Json bl = Json::array();
  for (const auto& b : blocks) {
    std::vector<int> one_based;
    for (int c : b.coordinates) one_based.push_back(c + 1);
    Json sup = Json::array();
    for (const auto& g : b.grading.support()) sup.push_back(b.grading.group.element_to_string(g));
    bl.push_back({{"coordinates", one_based}, {"size", b.coordinates.size()}, {"ergodic", b.ergodic},
                  {"support", std::move(sup)}});
  }
  j["blocks"] = std::move(bl);
  return j;
}

OrbitReport orbit_decompose(const Grading& grading) {
  const std::size_t n = static_cast<std::size_t>(grading.n);
  const auto& a1 = grading.identity_component();
  if (a1.empty()) throw std::logic_error("identity component is empty");

  // Coordinates where every vector of A_1 agrees lie in one block.
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (std::size_t i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = static_cast<int>(classes.size());
    classes.push_back({static_cast<int>(i)});
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cls[j] >= 0) continue;
      bool same = true;
      for (const auto& v : a1) same = same && v[i] == v[j];
      if (same) {
        cls[j] = cls[i];
        classes.back().push_back(static_cast<int>(j));
      }
    }
  }
  OrbitReport out;
  out.k = static_cast<int>(rank(a1));
  if (static_cast<std::size_t>(out.k) != classes.size())
    throw std::logic_error("identity component is not a diagonal subalgebra");
  for (const auto& c : classes) {
    CycloVec f(n, Cyclotomic(0));
    for (int i : c) f[static_cast<std::size_t>(i)] = Cyclotomic(1);
    if (!in_span(a1, f)) throw std::logic_error("block indicator outside the identity component");
    out.projections.push_back(f);

    BlockRestriction block;
    block.coordinates = c;
    block.grading.n = static_cast<int>(c.size());
    block.grading.group = grading.group;
    for (const auto& comp : grading.components) {
      std::vector<CycloVec> restricted;
      for (const auto& v : comp.basis) {
        CycloVec w;
        for (int i : c) w.push_back(v[static_cast<std::size_t>(i)]);
        restricted.push_back(std::move(w));
      }
      auto basis = row_reduce(std::move(restricted));
      if (!basis.empty()) block.grading.components.push_back({comp.label, std::move(basis)});
    }
    block.ergodic = rank(block.grading.identity_component()) == 1;
    out.blocks.push_back(std::move(block));
  }
  for (const auto& c : classes) out.partition.push_back(static_cast<int>(c.size()));
  std::sort(out.partition.begin(), out.partition.end(), std::greater<>());
  return out;
}

Grading read_grading(std::istream& in) {
  Grading out;
  std::optional<unsigned> field;
  std::vector<int> blocks;
  bool have_group = false;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("grading line " + std::to_string(lineno) + ": " + why);
  };
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("group ", 0) == 0) {
      if (have_group) fail("second group declaration");
      out.group = GradingGroup::parse(line.substr(6));
      have_group = true;
      continue;
    }
    if (line.rfind("field ", 0) == 0) {
      std::string v = trim(line.substr(6));
      if (v.rfind("Q(z", 0) == 0 && v.back() == ')') v = v.substr(3, v.size() - 4);
      try {
        field = static_cast<unsigned>(std::stoul(v));
      } catch (const std::exception&) {
        fail("bad field order '" + v + "'");
      }
      if (*field == 0) fail("field order must be positive");
      continue;
    }
    if (line.rfind("blocks ", 0) == 0) {
      std::stringstream ss(line.substr(7));
      for (std::string part; std::getline(ss, part, ',');) blocks.push_back(std::stoi(trim(part)));
      continue;
    }
    if (!have_group) fail("component before the group declaration");
    const auto colon = line.find(':');
    if (colon == std::string::npos) fail("expected 'label: (coordinates) ...'");
    GradingComponent comp;
    try {
      comp.label = out.group.parse_element(line.substr(0, colon));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    const unsigned order = field.value_or(out.group.field_order());
    const std::string rest = line.substr(colon + 1);
    std::size_t pos = 0;
    while (true) {
      const auto open = rest.find('(', pos);
      if (open == std::string::npos) {
        if (!trim(rest.substr(pos)).empty()) fail("unexpected text after coordinates");
        break;
      }
      if (!trim(rest.substr(pos, open - pos)).empty()) fail("unexpected text before '('");
      const auto close = rest.find(')', open);
      if (close == std::string::npos) fail("unterminated coordinate tuple");
      CycloVec v;
      std::stringstream ss(rest.substr(open + 1, close - open - 1));
      for (std::string coord; std::getline(ss, coord, ',');) {
        try {
          v.push_back(parse_cyclotomic(trim(coord), order));
        } catch (const std::invalid_argument& e) {
          fail(e.what());
        }
      }
      if (out.n == 0) out.n = static_cast<int>(v.size());
      if (v.size() != static_cast<std::size_t>(out.n)) fail("coordinate tuples of different lengths");
      comp.basis.push_back(std::move(v));
      pos = close + 1;
    }
    if (comp.basis.empty()) fail("component without basis vectors");
    out.components.push_back(std::move(comp));
  }
  if (!have_group) throw std::invalid_argument("grading declares no group");
  if (out.components.empty()) throw std::invalid_argument("grading has no components");
  if (!blocks.empty()) out.group = GradingGroup(out.group.factors(), blocks);
  return out;
}

Grading read_grading_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return read_grading(in);
}

std::string write_grading(const Grading& grading) {
  const unsigned field = grading_field(grading);
  std::string out = "group " + grading.group.to_string() + "\nfield " + std::to_string(field) + "\n";
  if (!grading.group.block_sizes().empty()) {
    out += "blocks ";
    for (std::size_t i = 0; i < grading.group.block_sizes().size(); ++i)
      out += (i ? "," : "") + std::to_string(grading.group.block_sizes()[i]);
    out += "\n";
  }
  for (const auto& c : grading.components) {
    out += grading.group.element_to_string(c.label) + ":";
    for (const auto& v : c.basis) out += " " + vector_to_string(v, field);
    out += "\n";
  }
  return out;
}

}  // namespace qperm
