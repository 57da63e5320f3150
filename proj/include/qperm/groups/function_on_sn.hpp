#pragma once

#include <vector>

#include "qperm/exactnum/rational.hpp"
#include "qperm/groups/permutation.hpp"
#include "qperm/report/certificate.hpp"
#include "qperm/exec.hpp"

namespace qperm {

/// Element of K(S_n): a Q-valued function on the symmetric group with
/// pointwise operations. Values are indexed by lex_rank.
class FunctionOnSn {
 public:
  explicit FunctionOnSn(int n);
  FunctionOnSn(int n, std::vector<Rational> values);

  static FunctionOnSn constant(int n, const Rational& c);
  /// e_sigma, the indicator of sigma.
  static FunctionOnSn indicator(const Permutation& sigma);
  /// p_ij(sigma) = delta_{i, sigma(j)}, 0-based i and j.
  static FunctionOnSn coordinate(int n, int i, int j);

  int n() const { return n_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator()(const Permutation& sigma) const { return values_[lex_rank(sigma)]; }
  bool is_zero() const;

  FunctionOnSn& operator+=(const FunctionOnSn& o);
  FunctionOnSn& operator-=(const FunctionOnSn& o);
  FunctionOnSn& operator*=(const FunctionOnSn& o);
  friend FunctionOnSn operator+(FunctionOnSn a, const FunctionOnSn& b) { return a += b; }
  friend FunctionOnSn operator-(FunctionOnSn a, const FunctionOnSn& b) { return a -= b; }
  friend FunctionOnSn operator*(FunctionOnSn a, const FunctionOnSn& b) { return a *= b; }
  friend bool operator==(const FunctionOnSn&, const FunctionOnSn&) = default;

  /// Support listed as "sigma -> value" in cycle notation.
  Json to_json() const;

 private:
  void require_same(const FunctionOnSn& o) const;
  int n_;
  std::vector<Rational> values_;
};

/// For every sigma in S_n, checks e_sigma = p_{sigma(1)1} ... p_{sigma(n)n}
/// pointwise.
CertificateReport e_sigma_product_check(int n, Exec exec = Exec::parallel);

}  // namespace qperm
