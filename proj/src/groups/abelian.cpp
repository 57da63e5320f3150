#include "qperm/groups/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qperm {

namespace {

std::map<unsigned, std::vector<unsigned>> prime_power_parts(const std::vector<unsigned>& orders) {
  std::map<unsigned, std::vector<unsigned>> parts;  // prime -> prime powers
  for (unsigned m : orders) {
    if (m == 0) throw std::invalid_argument("cyclic group of order 0");
    for (unsigned p = 2; p * p <= m; ++p) {
      unsigned q = 1;
      while (m % p == 0) {
        m /= p;
        q *= p;
      }
      if (q > 1) parts[p].push_back(q);
    }
    if (m > 1) parts[m].push_back(m);
  }
  return parts;
}

void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& current,
                std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (unsigned part = std::min(n, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(n - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<unsigned> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw std::invalid_argument("invariant factors must be at least 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
}

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(const std::vector<unsigned>& orders) {
  auto parts = prime_power_parts(orders);
  std::size_t rank = 0;
  for (auto& [p, powers] : parts) {
    std::sort(powers.begin(), powers.end(), std::greater<>());
    rank = std::max(rank, powers.size());
  }
  // Largest invariant factor collects the largest power of every prime.
  std::vector<unsigned> factors(rank, 1);
  for (const auto& [p, powers] : parts)
    for (std::size_t k = 0; k < powers.size(); ++k) factors[rank - 1 - k] *= powers[k];
  return FiniteAbelianGroup(std::move(factors));
}

FiniteAbelianGroup FiniteAbelianGroup::parse(std::string_view descriptor) {
  std::string text;
  for (char c : descriptor)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  if (text == "1" || text == "Z1" || text == "trivial") return FiniteAbelianGroup{};
  std::vector<unsigned> orders;
  std::size_t pos = 0;
  auto fail = [&] { throw std::invalid_argument("malformed group descriptor '" + std::string(descriptor) + "'"); };
  while (pos < text.size()) {
    if (text[pos] != 'Z') fail();
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail();
    orders.push_back(static_cast<unsigned>(std::stoul(text.substr(start, pos - start))));
    if (pos < text.size()) {
      if (text[pos] != 'x') fail();
      ++pos;
      if (pos == text.size()) fail();
    }
  }
  if (orders.empty()) fail();
  return from_cyclic_orders(orders);
}

unsigned FiniteAbelianGroup::order() const {
  unsigned n = 1;
  for (unsigned d : factors_) n *= d;
  return n;
}

std::vector<FiniteAbelianGroup::Element> FiniteAbelianGroup::elements() const {
  std::vector<Element> out;
  out.reserve(order());
  for (std::size_t i = 0; i < order(); ++i) out.push_back(element_at(i));
  return out;
}

std::size_t FiniteAbelianGroup::index_of(const Element& a) const {
  if (!contains(a)) throw std::invalid_argument("not an element of " + to_string());
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + a[i];
  return idx;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::element_at(std::size_t index) const {
  Element a(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    a[i] = static_cast<unsigned>(index % factors_[i]);
    index /= factors_[i];
  }
  return a;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::add(const Element& a, const Element& b) const {
  Element c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = (a[i] + b[i]) % factors_[i];
  return c;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::negate(const Element& a) const {
  Element c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = (factors_[i] - a[i]) % factors_[i];
  return c;
}

unsigned FiniteAbelianGroup::element_order(const Element& a) const {
  unsigned ord = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) ord = std::lcm(ord, factors_[i] / std::gcd(factors_[i], a[i]));
  return ord;
}

bool FiniteAbelianGroup::contains(const Element& a) const {
  if (a.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (a[i] >= factors_[i]) return false;
  return true;
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) out += (i ? "xZ" : "Z") + std::to_string(factors_[i]);
  return out;
}

std::string FiniteAbelianGroup::element_to_string(const Element& a) const {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + std::to_string(a[i]);
  return out + ")";
}

std::vector<FiniteAbelianGroup> abelian_groups_of_order(unsigned n) {
  if (n == 0) throw std::invalid_argument("group order must be positive");
  auto parts = prime_power_parts({n});
  // Each prime contributes a partition of its exponent.
  std::vector<std::vector<std::vector<unsigned>>> choices;  // per prime: list of power lists
  for (const auto& [p, powers] : parts) {
    unsigned e = 0;
    for (unsigned q = powers.front(); q > 1; q /= p) ++e;
    std::vector<std::vector<unsigned>> parts_of_e;
    std::vector<unsigned> current;
    partitions(e, e, current, parts_of_e);
    std::vector<std::vector<unsigned>> as_powers;
    for (const auto& part : parts_of_e) {
      std::vector<unsigned> qs;
      for (unsigned k : part) {
        unsigned q = 1;
        for (unsigned t = 0; t < k; ++t) q *= p;
        qs.push_back(q);
      }
      as_powers.push_back(std::move(qs));
    }
    choices.push_back(std::move(as_powers));
  }
  std::vector<FiniteAbelianGroup> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    std::vector<unsigned> orders;
    for (std::size_t i = 0; i < choices.size(); ++i)
      orders.insert(orders.end(), choices[i][pick[i]].begin(), choices[i][pick[i]].end());
    out.push_back(FiniteAbelianGroup::from_cyclic_orders(orders));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Cyclotomic Character::operator()(const FiniteAbelianGroup::Element& a) const {
  const unsigned e = group.exponent();
  const auto& d = group.invariant_factors();
  unsigned long power = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    power = (power + static_cast<unsigned long>(exponents[i]) * a[i] % d[i] * (e / d[i])) % e;
  return Cyclotomic::zeta(e, static_cast<long>(power));
}

std::vector<std::vector<Cyclotomic>> character_table(const FiniteAbelianGroup& group, Exec exec) {
  const auto elems = group.elements();
  std::vector<std::vector<Cyclotomic>> table(elems.size());
  auto fill_row = [&](std::size_t r) {
    Character chi{group, elems[r]};
    std::vector<Cyclotomic> row;
    row.reserve(elems.size());
    for (const auto& a : elems) row.push_back(chi(a));
    table[r] = std::move(row);
  };
  if (exec == Exec::serial) {
    for (std::size_t r = 0; r < elems.size(); ++r) fill_row(r);
  } else {
    const auto rows = static_cast<long>(elems.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long r = 0; r < rows; ++r) fill_row(static_cast<std::size_t>(r));
  }
  return table;
}

std::vector<Permutation> regular_embedding(const FiniteAbelianGroup& group) {
  const auto elems = group.elements();
  std::vector<Permutation> out;
  out.reserve(elems.size());
  for (const auto& g : elems) {
    std::vector<int> images;
    images.reserve(elems.size());
    for (const auto& x : elems) images.push_back(static_cast<int>(group.index_of(group.add(g, x))));
    out.emplace_back(std::move(images));
  }
  return out;
}

}  // namespace qperm
