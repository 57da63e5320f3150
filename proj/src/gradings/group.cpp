#include "qperm/gradings/group.hpp"

#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qperm {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

bool is_identity_element(const FiniteAbelianGroup::Element& a) {
  for (unsigned v : a)
    if (v != 0) return false;
  return true;
}

FiniteAbelianGroup::Element parse_tuple(const std::string& text, std::size_t& pos) {
  if (pos >= text.size() || text[pos] != '(') throw std::invalid_argument("expected '(' in group element");
  ++pos;
  FiniteAbelianGroup::Element out;
  while (pos < text.size() && text[pos] != ')') {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("expected an exponent in group element");
    out.push_back(static_cast<unsigned>(std::stoul(text.substr(start, pos - start))));
    if (pos < text.size() && text[pos] == ',') ++pos;
  }
  if (pos >= text.size()) throw std::invalid_argument("unterminated group element");
  ++pos;
  return out;
}

}  // namespace

GradingGroup::GradingGroup(std::vector<FiniteAbelianGroup> factors, std::vector<int> block_sizes)
    : factors_(std::move(factors)), block_sizes_(std::move(block_sizes)) {
  if (!block_sizes_.empty()) {
    if (block_sizes_.size() != factors_.size()) throw std::invalid_argument("one block size per factor");
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (factors_[i].order() != static_cast<unsigned>(block_sizes_[i]))
        throw std::invalid_argument("factor " + factors_[i].to_string() + " does not match block size " +
                                    std::to_string(block_sizes_[i]));
  }
}

GradingGroup GradingGroup::parse(std::string_view descriptor) {
  const std::string text = strip(descriptor);
  if (text.empty()) throw std::invalid_argument("empty group descriptor");
  std::vector<FiniteAbelianGroup> factors;
  std::size_t start = 0;
  while (true) {
    const auto star = text.find('*', start);
    factors.push_back(FiniteAbelianGroup::parse(text.substr(start, star - start)));
    if (star == std::string::npos) break;
    start = star + 1;
  }
  if (factors.size() == 1 && factors[0].order() == 1) factors.clear();
  return GradingGroup(std::move(factors));
}

std::size_t GradingGroup::nontrivial_factor_count() const {
  std::size_t k = 0;
  for (const auto& f : factors_) k += f.order() > 1 ? 1 : 0;
  return k;
}

unsigned GradingGroup::field_order() const {
  unsigned m = 1;
  for (const auto& f : factors_) m = std::lcm(m, f.exponent());
  return m;
}

void GradingGroup::validate(const GroupWord& a) const {
  for (std::size_t i = 0; i < a.letters.size(); ++i) {
    const auto& [f, e] = a.letters[i];
    if (f >= factors_.size() || !factors_[f].contains(e) || is_identity_element(e))
      throw std::invalid_argument("not a reduced word of " + to_string());
    if (i > 0 && a.letters[i - 1].first == f) throw std::invalid_argument("not a reduced word of " + to_string());
  }
}

GroupWord GradingGroup::letter(unsigned factor, const FiniteAbelianGroup::Element& a) const {
  if (factor >= factors_.size() || !factors_[factor].contains(a))
    throw std::invalid_argument("not an element of factor " + std::to_string(factor + 1));
  GroupWord w;
  if (!is_identity_element(a)) w.letters.emplace_back(factor, a);
  return w;
}

GroupWord GradingGroup::multiply(const GroupWord& a, const GroupWord& b) const {
  GroupWord out = a;
  for (const auto& [f, e] : b.letters) {
    if (!out.letters.empty() && out.letters.back().first == f) {
      auto merged = factors_[f].add(out.letters.back().second, e);
      out.letters.pop_back();
      if (!is_identity_element(merged)) out.letters.emplace_back(f, std::move(merged));
    } else {
      out.letters.emplace_back(f, e);
    }
  }
  return out;
}

GroupWord GradingGroup::inverse(const GroupWord& a) const {
  GroupWord out;
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
    out.letters.emplace_back(it->first, factors_[it->first].negate(it->second));
  return out;
}

std::optional<unsigned> GradingGroup::order(const GroupWord& a) const {
  validate(a);
  // Conjugating by the first letter merges it into the last; repeat until
  // the word is cyclically reduced.
  GroupWord w = a;
  while (w.letters.size() >= 2 && w.letters.front().first == w.letters.back().first) {
    GroupWord first;
    first.letters.push_back(w.letters.front());
    w = multiply(multiply(inverse(first), w), first);
  }
  if (w.letters.empty()) return 1u;
  if (w.letters.size() == 1) return factors_[w.letters[0].first].element_order(w.letters[0].second);
  return std::nullopt;
}

std::optional<bool> GradingGroup::generated_by(const std::vector<GroupWord>& gens) const {
  bool has_long = false;
  std::vector<std::vector<FiniteAbelianGroup::Element>> per_factor(factors_.size());
  for (const auto& g : gens) {
    validate(g);
    if (g.letters.size() == 1)
      per_factor[g.letters[0].first].push_back(g.letters[0].second);
    else if (g.letters.size() > 1)
      has_long = true;
  }
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    const auto& group = factors_[f];
    std::set<FiniteAbelianGroup::Element> span{group.identity()};
    std::vector<FiniteAbelianGroup::Element> frontier{group.identity()};
    while (!frontier.empty()) {
      std::vector<FiniteAbelianGroup::Element> next;
      for (const auto& x : frontier)
        for (const auto& g : per_factor[f]) {
          auto y = group.add(x, g);
          if (span.insert(y).second) next.push_back(std::move(y));
        }
      frontier = std::move(next);
    }
    if (span.size() != group.order()) return has_long ? std::nullopt : std::optional<bool>(false);
  }
  return true;
}

std::string GradingGroup::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) out += (i ? "*" : "") + factors_[i].to_string();
  return out;
}

std::string GradingGroup::element_to_string(const GroupWord& a) const {
  if (a.is_identity()) return "1";
  std::string out;
  for (std::size_t i = 0; i < a.letters.size(); ++i) {
    const auto& [f, e] = a.letters[i];
    if (i) out += "*";
    if (factors_.size() > 1) out += "g" + std::to_string(f + 1);
    out += factors_[f].element_to_string(e);
  }
  return out;
}

GroupWord GradingGroup::parse_element(std::string_view text_in) const {
  const std::string text = strip(text_in);
  if (text == "1" || text == "e") return {};
  GroupWord out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    unsigned factor = 0;
    if (text[pos] == 'g') {
      std::size_t start = ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw std::invalid_argument("expected a factor number after 'g'");
      factor = static_cast<unsigned>(std::stoul(text.substr(start, pos - start)));
      if (factor == 0 || factor > factors_.size()) throw std::invalid_argument("factor number out of range");
      --factor;
    } else if (factors_.size() != 1) {
      throw std::invalid_argument("free product elements need factor prefixes like g1(...)");
    }
    auto e = parse_tuple(text, pos);
    if (!factors_[factor].contains(e)) throw std::invalid_argument("exponents out of range for " + factors_[factor].to_string());
    out = multiply(out, letter(factor, e));
    if (pos < text.size()) {
      if (text[pos] != '*') throw std::invalid_argument("expected '*' between letters");
      ++pos;
    }
  }
  return out;
}

}  // namespace qperm
