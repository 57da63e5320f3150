#include "qperm/ncalg/parse.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

namespace qperm {

namespace {

template <class C>
class PolyParser {
 public:
  using CoeffReader = std::function<C(std::string_view)>;

  PolyParser(std::string_view text, AlphabetPtr alphabet, CoeffReader read_coeff)
      : text_(text), alphabet_(std::move(alphabet)), read_coeff_(std::move(read_coeff)) {}

  Poly<C> parse() {
    std::vector<typename Poly<C>::Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [word, coeff] = term();
      terms.emplace_back(std::move(word), negative ? -coeff : coeff);
      first = false;
      skip_ws();
    }
    return Poly<C>::from_terms(alphabet_, std::move(terms));
  }

 private:
  std::pair<Word, C> term() {
    C coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
      coeff = read_coeff_(text_.substr(start, pos_ - start));
      have_coeff = true;
    } else if (peek() == '(') {
      const std::size_t start = ++pos_;
      while (!at_end() && peek() != ')') ++pos_;
      if (at_end()) fail("unbalanced '('");
      coeff = read_coeff_(text_.substr(start, pos_ - start));
      ++pos_;
      have_coeff = true;
    }
    skip_ws();
    if (have_coeff) {
      if (at_end() || peek() != '*') return {Word{}, coeff};
      ++pos_;
      skip_ws();
    }
    return {monomial(), coeff};
  }

  Word monomial() {
    std::vector<Letter> letters;
    while (true) {
      skip_ws();
      const std::size_t start = pos_;
      while (!at_end() && is_name_char(peek())) ++pos_;
      if (start == pos_) fail("expected generator name");
      auto name = text_.substr(start, pos_ - start);
      auto g = alphabet_->find(name);
      if (!g) fail("unknown generator '" + std::string(name) + "'");
      letters.push_back(*g);
      skip_ws();
      if (at_end() || peek() != '.') break;
      ++pos_;
    }
    return Word(std::move(letters));
  }

  static bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':';
  }
  char peek() const { return text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("polynomial syntax error at column " + std::to_string(pos_ + 1) + " in '" +
                                std::string(text_) + "': " + why);
  }

  std::string_view text_;
  AlphabetPtr alphabet_;
  CoeffReader read_coeff_;
  std::size_t pos_ = 0;
};

}  // namespace

NCPoly parse_ncpoly(std::string_view text, const AlphabetPtr& alphabet) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed == "0") return NCPoly(alphabet);
  PolyParser<Rational> parser(text, alphabet, [&](std::string_view tok) -> Rational {
    if (tok.find('z') != std::string_view::npos)
      throw std::invalid_argument("cyclotomic coefficient '" + std::string(tok) + "' in a polynomial over Q");
    return Rational::parse(tok);
  });
  return parser.parse();
}

CycloPoly parse_cyclo_poly(std::string_view text, const AlphabetPtr& alphabet, unsigned order) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed == "0") return CycloPoly(alphabet);
  PolyParser<Cyclotomic> parser(text, alphabet,
                                [order](std::string_view tok) { return parse_cyclotomic(tok, order); });
  return parser.parse();
}

}  // namespace qperm
