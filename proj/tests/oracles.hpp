#pragma once

// Test-side reference computations. None of these call into the library's
// algorithms; they work from definitions with naive enumeration or floating
// point, which is enough at the sizes the tests use.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "qperm/exactnum/cyclotomic.hpp"

namespace oracle {

using cplx = std::complex<double>;

inline cplx to_complex(const qperm::Cyclotomic& c) {
  const double pi = std::acos(-1.0);
  cplx sum = 0;
  const auto coeffs = c.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const double v = coeffs[k].raw().get_d();
    sum += v * std::polar(1.0, 2 * pi * static_cast<double>(k) / c.order());
  }
  return sum;
}

inline bool near(cplx a, cplx b, double tol = 1e-9) { return std::abs(a - b) < tol; }

// Number of words over `letters` of each exact length 0..d avoiding every
// forbidden factor, by listing all words.
inline std::vector<std::uint64_t> count_avoiding(int letters, const std::vector<std::vector<int>>& forbidden, int d) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(d) + 1, 0);
  std::vector<std::vector<int>> layer{{}};
  for (int len = 0; len <= d; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer) {
      bool bad = false;
      for (const auto& f : forbidden)
        if (std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end() && !f.empty()) bad = true;
      if (bad) continue;
      ++counts[static_cast<std::size_t>(len)];
      for (int g = 0; g < letters; ++g) {
        auto v = w;
        v.push_back(g);
        next.push_back(std::move(v));
      }
    }
    layer = std::move(next);
  }
  return counts;
}

// Words in two letters with no letter repeated twice in a row, length <= d.
inline std::vector<std::uint64_t> alternating_word_dimensions(int d) {
  auto exact = count_avoiding(2, {{0, 0}, {1, 1}}, d);
  std::vector<std::uint64_t> cumulative;
  std::uint64_t run = 0;
  for (auto c : exact) cumulative.push_back(run += c);
  return cumulative;
}

// Partition numbers from the pentagonal recurrence.
inline std::vector<long> partition_numbers(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long sign = (k % 2) ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) total += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = total;
  }
  return p;
}

// Abelian groups of order n up to isomorphism: product of p(e) over the
// prime exponents of n.
inline long abelian_group_count(int n) {
  const auto p = partition_numbers(32);
  long count = 1;
  for (int q = 2; n > 1; ++q) {
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (e) count *= p[static_cast<std::size_t>(e)];
  }
  return count;
}

inline void partitions_into(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_into(n - k, k, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_into(n, n, cur, out);
  return out;
}

// Gradings counted as (partition, one group per block in block order).
inline long grading_choice_count(int n) {
  long total = 0;
  for (const auto& part : partitions(n)) {
    long c = 1;
    for (int m : part) c *= abelian_group_count(m);
    total += c;
  }
  return total;
}

inline long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Permutations as image vectors; product is composition a(b(x)).
using Perm = std::vector<int>;

inline Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[static_cast<std::size_t>(b[x])];
  return c;
}

inline std::vector<Perm> all_perms(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::set<Perm> closure(const std::vector<Perm>& gens, int n) {
  Perm id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> s{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        auto y = compose(g, x);
        if (s.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return s;
}

// Transitive abelian subgroups of S_n generated by at most two elements, up
// to conjugacy. Every abelian group of order <= 5 is two-generated.
inline std::size_t transitive_abelian_classes(int n) {
  const auto sn = all_perms(n);
  std::set<std::set<Perm>> found;
  for (const auto& a : sn)
    for (const auto& b : sn) {
      if (compose(a, b) != compose(b, a)) continue;
      auto h = closure({a, b}, n);
      if (static_cast<int>(h.size()) != n) continue;
      std::set<int> orbit;
      for (const auto& g : h) orbit.insert(g[0]);
      if (static_cast<int>(orbit.size()) != n) continue;
      found.insert(h);
    }
  // Canonical representative per conjugacy class: least conjugate set.
  std::set<std::set<Perm>> classes;
  for (const auto& h : found) {
    std::set<Perm> best;
    bool first = true;
    for (const auto& s : sn) {
      Perm inv(s.size());
      for (std::size_t x = 0; x < s.size(); ++x) inv[static_cast<std::size_t>(s[x])] = static_cast<int>(x);
      std::set<Perm> conj;
      for (const auto& g : h) conj.insert(compose(compose(s, g), inv));
      if (first || conj < best) best = conj;
      first = false;
    }
    classes.insert(best);
  }
  return classes.size();
}

}  // namespace oracle
