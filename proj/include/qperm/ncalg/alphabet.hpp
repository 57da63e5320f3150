#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qperm {

using Letter = std::uint16_t;

/// Ordered list of distinct generator names. The position of a name is its
/// letter index and fixes the generator order used by monomial orders.
class GeneratorAlphabet {
 public:
  explicit GeneratorAlphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter g) const { return names_.at(g); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Letter> find(std::string_view name) const;
  /// Throws std::invalid_argument for unknown names.
  Letter index(std::string_view name) const;

  friend bool operator==(const GeneratorAlphabet& a, const GeneratorAlphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Letter> lookup_;
};

using AlphabetPtr = std::shared_ptr<const GeneratorAlphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names);

/// Same object or same names in the same order.
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

/// Finite sequence of letters; the empty word is the unit monomial.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  template <class It>
  Word(It first, It last) : letters_(first, last) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }

  Word subword(std::size_t pos, std::size_t len) const {
    return Word(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  }
  Word reversed() const { return Word(letters_.rbegin(), letters_.rend()); }

  friend Word operator*(const Word& a, const Word& b) {
    Word w;
    w.letters_.reserve(a.size() + b.size());
    w.letters_.insert(w.letters_.end(), a.letters_.begin(), a.letters_.end());
    w.letters_.insert(w.letters_.end(), b.letters_.begin(), b.letters_.end());
    return w;
  }

  friend bool operator==(const Word& a, const Word& b) = default;

  std::string to_string(const GeneratorAlphabet& alphabet) const;

 private:
  std::vector<Letter> letters_;
};

enum class MonomialOrder { deglex };

/// Degree first, then lexicographic on letter indices. Compatible with
/// concatenation on both sides.
std::strong_ordering compare_words(const Word& a, const Word& b, MonomialOrder order = MonomialOrder::deglex);

struct WordGreater {
  bool operator()(const Word& a, const Word& b) const { return compare_words(a, b) > 0; }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Letter l : w) h = (h ^ l) * 0x100000001b3ull;
    return h;
  }
};

std::string to_string(MonomialOrder order);
/// Throws std::invalid_argument for unknown descriptors.
MonomialOrder parse_monomial_order(std::string_view descriptor);

}  // namespace qperm
