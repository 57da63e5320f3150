#include "qperm/groups/subgroups.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "qperm/cost_guard.hpp"

namespace qperm {

namespace {

void guard(int n, const char* what) {
  if (n > kBruteForceSubgroupLimit)
    throw CostGuardError(std::string(what) + " is limited to n <= " + std::to_string(kBruteForceSubgroupLimit),
                         "use --mode classified, which is complete for every n");
}

std::map<unsigned, std::size_t> order_statistics(const std::vector<Permutation>& elements) {
  std::map<unsigned, std::size_t> stats;
  for (const auto& g : elements) ++stats[static_cast<unsigned>(g.order())];
  return stats;
}

std::map<unsigned, std::size_t> order_statistics(const FiniteAbelianGroup& group) {
  std::map<unsigned, std::size_t> stats;
  for (const auto& a : group.elements()) ++stats[group.element_order(a)];
  return stats;
}

std::vector<Permutation> greedy_generators(int n, const std::vector<Permutation>& sorted_elements) {
  std::vector<Permutation> gens;
  std::vector<Permutation> span{Permutation::identity(n)};
  for (const auto& g : sorted_elements) {
    if (std::binary_search(span.begin(), span.end(), g)) continue;
    gens.push_back(g);
    span = generated_subgroup(n, gens);
    if (span.size() == sorted_elements.size()) break;
  }
  return gens;
}

PermutationSubgroup describe(int n, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  PermutationSubgroup out;
  out.type = abelian_isomorphism_type(elements);
  out.generators = greedy_generators(n, elements);
  out.elements = std::move(elements);
  return out;
}

// Abelian subgroups of S_n as sorted rank sets, grown one commuting element
// at a time from the trivial group.
std::vector<std::vector<std::size_t>> abelian_subgroups_by_rank(int n, Exec exec) {
  const auto all = symmetric_group(n);
  const std::size_t N = all.size();
  std::vector<std::size_t> table(N * N);
  auto fill = [&](std::size_t a) {
    for (std::size_t b = 0; b < N; ++b) table[a * N + b] = lex_rank(all[a] * all[b]);
  };
  if (exec == Exec::serial) {
    for (std::size_t a = 0; a < N; ++a) fill(a);
  } else {
    const auto rows = static_cast<long>(N);
#pragma omp parallel for schedule(static)
    for (long a = 0; a < rows; ++a) fill(static_cast<std::size_t>(a));
  }
  auto mul = [&](std::size_t a, std::size_t b) { return table[a * N + b]; };

  auto close = [&](std::vector<std::size_t> gens) {
    std::set<std::size_t> elems{0};
    std::vector<std::size_t> frontier{0};
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t x : frontier)
        for (std::size_t g : gens) {
          const std::size_t y = mul(g, x);
          if (elems.insert(y).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
    return std::vector<std::size_t>(elems.begin(), elems.end());
  };

  std::set<std::vector<std::size_t>> seen{{0}};
  std::vector<std::vector<std::size_t>> level{{0}};
  while (!level.empty()) {
    std::vector<std::vector<std::vector<std::size_t>>> grown(level.size());
    auto grow = [&](std::size_t i) {
      const auto& h = level[i];
      for (std::size_t g = 1; g < N; ++g) {
        if (std::binary_search(h.begin(), h.end(), g)) continue;
        bool commutes = true;
        for (std::size_t x : h)
          if (mul(g, x) != mul(x, g)) {
            commutes = false;
            break;
          }
        if (!commutes) continue;
        std::vector<std::size_t> gens = h;
        gens.push_back(g);
        grown[i].push_back(close(std::move(gens)));
      }
    };
    if (exec == Exec::serial) {
      for (std::size_t i = 0; i < level.size(); ++i) grow(i);
    } else {
      const auto count = static_cast<long>(level.size());
#pragma omp parallel for schedule(dynamic, 1)
      for (long i = 0; i < count; ++i) grow(static_cast<std::size_t>(i));
    }
    std::vector<std::vector<std::size_t>> next;
    for (auto& bucket : grown)
      for (auto& h : bucket)
        if (seen.insert(h).second) next.push_back(std::move(h));
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::string to_string(SubgroupMode mode) { return mode == SubgroupMode::classified ? "classified" : "brute_force"; }

SubgroupMode parse_subgroup_mode(const std::string& text) {
  if (text == "classified") return SubgroupMode::classified;
  if (text == "brute_force" || text == "brute-force") return SubgroupMode::brute_force;
  throw std::invalid_argument("unknown subgroup mode '" + text + "'");
}

std::vector<Permutation> generated_subgroup(int n, const std::vector<Permutation>& generators) {
  std::set<Permutation> elems{Permutation::identity(n)};
  std::vector<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        Permutation y = g * x;
        if (elems.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return {elems.begin(), elems.end()};
}

bool is_transitive(int n, const std::vector<Permutation>& elements) {
  std::vector<char> reached(static_cast<std::size_t>(n), 0);
  for (const auto& g : elements) reached[static_cast<std::size_t>(g(0))] = 1;
  return std::all_of(reached.begin(), reached.end(), [](char c) { return c != 0; });
}

bool is_commutative(const std::vector<Permutation>& elements) {
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = a + 1; b < elements.size(); ++b)
      if (elements[a] * elements[b] != elements[b] * elements[a]) return false;
  return true;
}

bool is_semiregular(int n, const std::vector<Permutation>& elements) {
  for (const auto& g : elements) {
    if (g.is_identity()) continue;
    for (int x = 0; x < n; ++x)
      if (g(x) == x) return false;
  }
  return true;
}

std::vector<std::size_t> conjugacy_key(int n, const std::vector<Permutation>& elements) {
  guard(n, "conjugacy classification");
  std::vector<std::size_t> best;
  for (const auto& c : symmetric_group(n)) {
    const Permutation ci = c.inverse();
    std::vector<std::size_t> key;
    key.reserve(elements.size());
    for (const auto& g : elements) key.push_back(lex_rank(c * g * ci));
    std::sort(key.begin(), key.end());
    if (best.empty() || key < best) best = std::move(key);
  }
  return best;
}

FiniteAbelianGroup abelian_isomorphism_type(const std::vector<Permutation>& elements) {
  if (elements.empty() || !is_commutative(elements)) throw std::invalid_argument("not an abelian group");
  const auto stats = order_statistics(elements);
  for (const auto& candidate : abelian_groups_of_order(static_cast<unsigned>(elements.size())))
    if (order_statistics(candidate) == stats) return candidate;
  throw std::invalid_argument("element orders match no abelian group");
}

std::vector<PermutationSubgroup> transitive_abelian_subgroups(int n, SubgroupMode mode, Exec exec) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  std::vector<PermutationSubgroup> out;
  if (mode == SubgroupMode::classified) {
    for (const auto& group : abelian_groups_of_order(static_cast<unsigned>(n)))
      out.push_back(describe(n, regular_embedding(group)));
  } else {
    guard(n, "brute-force subgroup enumeration");
    const auto all = symmetric_group(n);
    std::set<std::vector<std::size_t>> classes;
    for (const auto& ranks : abelian_subgroups_by_rank(n, exec)) {
      std::vector<Permutation> elems;
      for (std::size_t r : ranks) elems.push_back(all[r]);
      if (!is_transitive(n, elems)) continue;
      if (!classes.insert(conjugacy_key(n, elems)).second) continue;
      out.push_back(describe(n, std::move(elems)));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.type < b.type; });
  return out;
}

}  // namespace qperm
