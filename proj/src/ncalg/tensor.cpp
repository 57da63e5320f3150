#include "qperm/ncalg/tensor.hpp"

namespace qperm {

std::string tensor_tag_prefix(unsigned factor, unsigned factors) {
  if (factors == 2) return factor == 0 ? "L:" : "R:";
  return "T" + std::to_string(factor + 1) + ":";
}

TensorEncoding::TensorEncoding(AlphabetPtr base, unsigned factors) : base_(std::move(base)), factors_(factors) {
  if (factors_ == 0) throw std::invalid_argument("tensor encoding needs at least one factor");
  std::vector<std::string> names;
  names.reserve(base_->size() * factors_);
  for (unsigned f = 0; f < factors_; ++f)
    for (const auto& n : base_->names()) names.push_back(tensor_tag_prefix(f, factors_) + n);
  tagged_ = make_alphabet(std::move(names));
}

Word TensorEncoding::embed_word(const Word& w, unsigned factor) const {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter g : w) out.push_back(tag(factor, g));
  return Word(std::move(out));
}

Word TensorEncoding::straighten_word(const Word& w) const {
  std::vector<Letter> out(w.begin(), w.end());
  std::stable_sort(out.begin(), out.end(), [&](Letter a, Letter b) { return factor_of(a) < factor_of(b); });
  return Word(std::move(out));
}

bool TensorEncoding::is_straightened(const Word& w) const {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (factor_of(w[i - 1]) > factor_of(w[i])) return false;
  return true;
}

std::vector<Word> TensorEncoding::decode(const Word& straightened) const {
  if (!is_straightened(straightened)) throw std::invalid_argument("decode expects a straightened word");
  std::vector<std::vector<Letter>> parts(factors_);
  for (Letter l : straightened) parts[factor_of(l)].push_back(base_letter(l));
  std::vector<Word> out;
  out.reserve(factors_);
  for (auto& p : parts) out.emplace_back(std::move(p));
  return out;
}

Word TensorEncoding::encode(std::span<const Word> parts) const {
  if (parts.size() != factors_) throw std::invalid_argument("encode needs one word per factor");
  std::vector<Letter> out;
  for (unsigned f = 0; f < factors_; ++f)
    for (Letter g : parts[f]) out.push_back(tag(f, g));
  return Word(std::move(out));
}

std::vector<std::pair<Word, Word>> TensorEncoding::cross_commutation_rules() const {
  std::vector<std::pair<Word, Word>> rules;
  const auto n = static_cast<Letter>(base_->size());
  for (unsigned hi = 1; hi < factors_; ++hi)
    for (unsigned lo = 0; lo < hi; ++lo)
      for (Letter g = 0; g < n; ++g)
        for (Letter h = 0; h < n; ++h)
          rules.emplace_back(Word{tag(hi, g), tag(lo, h)}, Word{tag(lo, h), tag(hi, g)});
  return rules;
}

}  // namespace qperm
