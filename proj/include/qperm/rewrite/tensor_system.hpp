#pragma once

#include "qperm/ncalg/tensor.hpp"
#include "qperm/rewrite/system.hpp"

namespace qperm {

/// Rewrite system for A^{(x)k}: one embedded copy of every rule per factor
/// plus the cross-commutation rules. Irreducible words are straightened, and
/// the result is confluent whenever `sys` is, so the status carries over.
template <ExactField C>
RewriteSystem<C> tensor_power_system(const RewriteSystem<C>& sys, const TensorEncoding& enc) {
  if (!same_alphabet(sys.alphabet(), enc.base())) throw std::invalid_argument("encoding built over another alphabet");
  RewriteSystem<C> out(enc.tagged(), sys.order());
  for (unsigned f = 0; f < enc.factors(); ++f)
    for (const auto* rule : sys.rules()) out.add_rule(enc.embed_word(rule->lhs, f), enc.embed(rule->rhs, f));
  for (const auto& [lhs, rhs] : enc.cross_commutation_rules())
    out.add_rule(lhs, Poly<C>::monomial(enc.tagged(), rhs, C(1)));
  out.set_status(sys.status());
  return out;
}

}  // namespace qperm
