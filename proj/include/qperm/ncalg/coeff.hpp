#pragma once

#include <concepts>
#include <string>
#include <string_view>

#include "qperm/exactnum/cyclotomic.hpp"
#include "qperm/exactnum/rational.hpp"

namespace qperm {

/// Exact field usable as a polynomial coefficient.
template <class C>
concept ExactField = requires(C a, const C& b) {
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_one() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::convertible_to<C>;
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { -a } -> std::convertible_to<C>;
  { a == b } -> std::convertible_to<bool>;
  C(1);
};

/// Text syntax of a coefficient inside a polynomial term.
template <class C>
struct CoeffSyntax;

template <>
struct CoeffSyntax<Rational> {
  static bool negative(const Rational& c) { return c.sign() < 0; }
  static std::string format(const Rational& c) { return c.to_string(); }
  static std::string field_name() { return "Q"; }
};

template <>
struct CoeffSyntax<Cyclotomic> {
  static bool negative(const Cyclotomic& c) {
    auto r = c.as_rational();
    return r && r->sign() < 0;
  }
  static std::string format(const Cyclotomic& c) {
    if (auto r = c.as_rational()) return r->to_string();
    return "(" + c.to_expression() + ")";
  }
  static std::string field_name() { return "Q(z)"; }
};

}  // namespace qperm
