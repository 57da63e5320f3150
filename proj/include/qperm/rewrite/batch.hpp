#pragma once

#include <exception>
#include <span>
#include <vector>

#include "qperm/exec.hpp"
#include "qperm/rewrite/system.hpp"

namespace qperm {

/// Normal forms of many polynomials against one frozen system. The parallel
/// kernel must agree element-wise with the serial one.
template <ExactField C>
std::vector<Poly<C>> normal_forms(std::span<const Poly<C>> polys, const RewriteSystem<C>& sys, Exec exec) {
  std::vector<Poly<C>> out(polys.size());
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < polys.size(); ++i) out[i] = sys.normal_form(polys[i]);
    return out;
  }
  std::exception_ptr error;
  const auto n = static_cast<long>(polys.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = sys.normal_form(polys[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(qperm_batch_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace qperm
