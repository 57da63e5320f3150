#include "qperm/ncalg/alphabet.hpp"

#include <limits>
#include <stdexcept>

namespace qperm {

GeneratorAlphabet::GeneratorAlphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > std::numeric_limits<Letter>::max())
    throw std::invalid_argument("alphabet too large");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty generator name");
    if (!lookup_.emplace(names_[i], static_cast<Letter>(i)).second)
      throw std::invalid_argument("duplicate generator name '" + names_[i] + "'");
  }
}

std::optional<Letter> GeneratorAlphabet::find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Letter GeneratorAlphabet::index(std::string_view name) const {
  if (auto g = find(name)) return *g;
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const GeneratorAlphabet>(std::move(names));
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

std::string Word::to_string(const GeneratorAlphabet& alphabet) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += '.';
    out += alphabet.name(letters_[i]);
  }
  return out;
}

std::strong_ordering compare_words(const Word& a, const Word& b, MonomialOrder) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::string to_string(MonomialOrder) { return "deglex"; }

MonomialOrder parse_monomial_order(std::string_view descriptor) {
  if (descriptor == "deglex") return MonomialOrder::deglex;
  throw std::invalid_argument("unknown monomial order '" + std::string(descriptor) + "'");
}

}  // namespace qperm
