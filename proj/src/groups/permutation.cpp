#include "qperm/groups/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qperm {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> v;
  v.reserve(images.size());
  for (int x : images) v.push_back(x - 1);
  return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation result = identity(n);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<int> v = identity(n).images_;
    const auto& cyc = *it;
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k] - 1, to = cyc[(k + 1) % cyc.size()] - 1;
      if (from < 0 || from >= n || to < 0 || to >= n) throw std::invalid_argument("cycle entry out of range");
      v[static_cast<std::size_t>(from)] = to;
    }
    result = Permutation(std::move(v)) * result;
  }
  return result;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.images_.size() != images_.size()) throw std::invalid_argument("degree mismatch in composition");
  std::vector<int> v(images_.size());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = images_[static_cast<std::size_t>(rhs.images_[x])];
  Permutation p;
  p.images_ = std::move(v);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(images_.size());
  for (std::size_t x = 0; x < v.size(); ++x) v[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
  Permutation p;
  p.images_ = std::move(v);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x)) return false;
  return true;
}

int Permutation::order() const {
  int result = 1;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(images_[y])) {
      seen[y] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::cycle_notation() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == static_cast<int>(x)) continue;
    out += "(";
    bool first = true;
    for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(images_[y])) {
      seen[y] = 1;
      if (!first) out += " ";
      out += std::to_string(y + 1);
      first = false;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

std::vector<Permutation> symmetric_group(int n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::size_t lex_rank(const Permutation& p) {
  const int n = p.degree();
  std::size_t rank = 0;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int v = 0; v < p(i); ++v) smaller += used[static_cast<std::size_t>(v)] ? 0 : 1;
    rank += static_cast<std::size_t>(smaller) * factorial(n - 1 - i);
    used[static_cast<std::size_t>(p(i))] = 1;
  }
  return rank;
}

Permutation lex_unrank(int n, std::size_t rank) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::size_t f = factorial(n - 1 - i);
    const std::size_t k = rank / f;
    rank %= f;
    images.push_back(pool[k]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return Permutation(std::move(images));
}

}  // namespace qperm
