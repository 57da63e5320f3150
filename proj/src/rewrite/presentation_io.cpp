#include "qperm/rewrite/presentation_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qperm {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

unsigned parse_field(const std::string& text) {
  if (text == "Q") return 1;
  if (text.size() > 4 && text.rfind("Q(z", 0) == 0 && text.back() == ')') {
    const auto digits = text.substr(3, text.size() - 4);
    if (digits.find_first_not_of("0123456789") == std::string::npos) {
      const unsigned m = static_cast<unsigned>(std::stoul(digits));
      if (m >= 1) return m;
    }
  }
  throw std::invalid_argument("unknown field '" + text + "'");
}

}  // namespace

PresentationText read_presentation(std::istream& in) {
  PresentationText out;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("presentation line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream words(line);
    std::string head;
    words >> head;
    if (head == "alphabet") {
      if (out.alphabet) fail("second alphabet declaration");
      std::vector<std::string> names;
      for (std::string name; words >> name;) names.push_back(name);
      if (names.empty()) fail("empty alphabet");
      out.alphabet = make_alphabet(std::move(names));
    } else if (head == "order") {
      std::string rest;
      words >> rest;
      out.order = parse_monomial_order(rest);
    } else if (head == "field") {
      std::string rest;
      std::getline(words, rest);
      out.field_order = parse_field(trim(rest));
    } else {
      if (!out.alphabet) fail("relation before the alphabet declaration");
      out.relations.push_back(line);
    }
  }
  if (!out.alphabet) throw std::invalid_argument("presentation declares no alphabet");
  return out;
}

PresentationText read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return read_presentation(in);
}

std::vector<NCPoly> rational_relations(const PresentationText& text) {
  if (text.field_order != 1)
    throw std::invalid_argument("coefficient field mismatch: presentation is over Q(z" +
                                std::to_string(text.field_order) + "), expected Q");
  std::vector<NCPoly> out;
  for (const auto& r : text.relations) out.push_back(parse_ncpoly(r, text.alphabet));
  return out;
}

std::vector<CycloPoly> cyclotomic_relations(const PresentationText& text) {
  std::vector<CycloPoly> out;
  for (const auto& r : text.relations) out.push_back(parse_cyclo_poly(r, text.alphabet, text.field_order));
  return out;
}

}  // namespace qperm
