#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qperm/ncalg/poly.hpp"

namespace qperm {

enum class MapDirection { homomorphism, antihomomorphism };

/// Extends g -> images[g] to the (anti)algebra map on the free algebra and
/// applies it to p. `images` is indexed by letter and must cover p's whole
/// alphabet; `target` is the alphabet of the images.
template <ExactField C>
Poly<C> substitute(const Poly<C>& p, std::span<const Poly<C>> images, MapDirection direction,
                   const AlphabetPtr& target) {
  if (p.alphabet() && images.size() != p.alphabet()->size())
    throw std::invalid_argument("substitution needs an image for every generator (got " +
                                std::to_string(images.size()) + ", need " +
                                std::to_string(p.alphabet()->size()) + ")");
  for (const auto& img : images)
    if (img.alphabet() && !same_alphabet(img.alphabet(), target))
      throw std::invalid_argument("substitution image over a foreign alphabet");
  Poly<C> result(target);
  const Poly<C> unit = Poly<C>::one(target);
  for (const auto& [w, c] : p.terms()) {
    Poly<C> image = unit;
    if (direction == MapDirection::homomorphism) {
      for (Letter g : w) image = image * images[g];
    } else {
      for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) image = image * images[*it];
    }
    result += image * c;
  }
  return result;
}

/// Evaluates p at commuting scalar values of its generators.
template <ExactField C>
C evaluate(const Poly<C>& p, std::span<const C> values) {
  if (p.alphabet() && values.size() != p.alphabet()->size())
    throw std::invalid_argument("evaluation needs a value for every generator");
  C total(0);
  for (const auto& [w, c] : p.terms()) {
    C term = c;
    for (Letter g : w) {
      term = term * values[g];
      if (term.is_zero()) break;
    }
    total = total + term;
  }
  return total;
}

/// Image maps sending each generator to itself.
template <ExactField C>
std::vector<Poly<C>> identity_images(const AlphabetPtr& alphabet) {
  std::vector<Poly<C>> out;
  out.reserve(alphabet->size());
  for (std::size_t g = 0; g < alphabet->size(); ++g)
    out.push_back(Poly<C>::generator(alphabet, static_cast<Letter>(g)));
  return out;
}

}  // namespace qperm
