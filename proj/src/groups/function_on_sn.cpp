#include "qperm/groups/function_on_sn.hpp"

#include <stdexcept>

namespace qperm {

FunctionOnSn::FunctionOnSn(int n) : n_(n), values_(factorial(n)) {}

FunctionOnSn::FunctionOnSn(int n, std::vector<Rational> values) : n_(n), values_(std::move(values)) {
  if (values_.size() != factorial(n)) throw std::invalid_argument("function on S_n needs n! values");
}

FunctionOnSn FunctionOnSn::constant(int n, const Rational& c) {
  return FunctionOnSn(n, std::vector<Rational>(factorial(n), c));
}

FunctionOnSn FunctionOnSn::indicator(const Permutation& sigma) {
  FunctionOnSn f(sigma.degree());
  f.values_[lex_rank(sigma)] = Rational(1);
  return f;
}

FunctionOnSn FunctionOnSn::coordinate(int n, int i, int j) {
  FunctionOnSn f(n);
  const auto all = symmetric_group(n);
  for (std::size_t r = 0; r < all.size(); ++r) f.values_[r] = Rational(all[r](j) == i ? 1 : 0);
  return f;
}

bool FunctionOnSn::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

void FunctionOnSn::require_same(const FunctionOnSn& o) const {
  if (o.n_ != n_) throw std::invalid_argument("functions on different symmetric groups");
}

FunctionOnSn& FunctionOnSn::operator+=(const FunctionOnSn& o) {
  require_same(o);
  for (std::size_t r = 0; r < values_.size(); ++r) values_[r] += o.values_[r];
  return *this;
}

FunctionOnSn& FunctionOnSn::operator-=(const FunctionOnSn& o) {
  require_same(o);
  for (std::size_t r = 0; r < values_.size(); ++r) values_[r] -= o.values_[r];
  return *this;
}

FunctionOnSn& FunctionOnSn::operator*=(const FunctionOnSn& o) {
  require_same(o);
  for (std::size_t r = 0; r < values_.size(); ++r) values_[r] *= o.values_[r];
  return *this;
}

Json FunctionOnSn::to_json() const {
  Json j = Json::object();
  for (std::size_t r = 0; r < values_.size(); ++r)
    if (!values_[r].is_zero()) j[lex_unrank(n_, r).cycle_notation()] = values_[r].to_string();
  return j;
}

CertificateReport e_sigma_product_check(int n, Exec exec) {
  if (n < 1) throw std::invalid_argument("e_sigma check needs n >= 1");
  const auto all = symmetric_group(n);
  std::vector<FunctionOnSn> coords;
  coords.reserve(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) coords.push_back(FunctionOnSn::coordinate(n, i, j));
  auto p = [&](int i, int j) -> const FunctionOnSn& { return coords[static_cast<std::size_t>(i * n + j)]; };

  std::vector<char> ok(all.size(), 0);
  auto check_one = [&](std::size_t r) {
    const auto& sigma = all[r];
    FunctionOnSn prod = FunctionOnSn::constant(n, Rational(1));
    for (int i = 0; i < n; ++i) prod *= p(sigma(i), i);
    ok[r] = prod == FunctionOnSn::indicator(sigma);
  };
  if (exec == Exec::serial) {
    for (std::size_t r = 0; r < all.size(); ++r) check_one(r);
  } else {
    const auto count = static_cast<long>(all.size());
#pragma omp parallel for schedule(static)
    for (long r = 0; r < count; ++r) check_one(static_cast<std::size_t>(r));
  }

  CertificateReport report;
  report.claim = "e_sigma = p_{sigma(1)1} ... p_{sigma(n)n} in K(S_" + std::to_string(n) + ") for every sigma";
  for (std::size_t r = 0; r < all.size(); ++r) {
    std::string product;
    for (int i = 0; i < n; ++i)
      product += (i ? "." : "") + std::string("p") + std::to_string(all[r](i) + 1) + std::to_string(i + 1);
    report.add_fact("sigma=" + all[r].cycle_notation(), "e_sigma == " + product, ok[r] != 0);
  }
  report.details["n"] = n;
  report.details["permutations_checked"] = all.size();
  report.finalize();
  return report;
}

}  // namespace qperm
