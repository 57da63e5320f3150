#include "qperm/qperm/quotient.hpp"

#include <stdexcept>

#include "qperm/exactnum/linalg.hpp"
#include "qperm/rewrite/filtration.hpp"

namespace qperm {

namespace {

std::shared_ptr<const RewriteSystem<Rational>> idempotent_pair_system() {
  auto result = complete_presentation(idempotent_pair_algebra(), 8);
  if (!result.status.is_confluent()) throw std::logic_error("idempotent pair system failed to complete");
  return std::make_shared<const RewriteSystem<Rational>>(std::move(result.system));
}

}  // namespace

FunctionOnSn pi_n(const NCPoly& p, int n, Exec exec) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (p.alphabet() && p.alphabet()->size() != static_cast<std::size_t>(n * n))
    throw std::invalid_argument("pi_n needs a polynomial over the n x n matrix alphabet");
  const auto all = symmetric_group(n);
  std::vector<Rational> values(all.size());
  auto eval_at = [&](std::size_t r) {
    std::vector<Rational> u(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) u[static_cast<std::size_t>(i * n + j)] = Rational(all[r](j) == i ? 1 : 0);
    values[r] = evaluate<Rational>(p, u);
  };
  if (exec == Exec::serial) {
    for (std::size_t r = 0; r < all.size(); ++r) eval_at(r);
  } else {
    const auto count = static_cast<long>(all.size());
#pragma omp parallel for schedule(static)
    for (long r = 0; r < count; ++r) eval_at(static_cast<std::size_t>(r));
  }
  return FunctionOnSn(n, std::move(values));
}

MatrixOverAlgebra idempotent_block_matrix(int n) {
  if (n < 4) throw std::invalid_argument("the block witness needs n >= 4");
  MatrixOverAlgebra w;
  w.n = n;
  w.ambient = idempotent_pair_system();
  const auto& alpha = w.ambient->alphabet();
  const NCPoly zero(alpha), one = NCPoly::one(alpha);
  const NCPoly p = NCPoly::generator(alpha, 0), q = NCPoly::generator(alpha, 1);
  w.entries.assign(static_cast<std::size_t>(n * n), zero);
  auto set = [&](int i, int j, const NCPoly& v) { w.entries[static_cast<std::size_t>(i * n + j)] = v; };
  for (int b = 0; b < 2; ++b) {
    const NCPoly& e = b == 0 ? p : q;
    set(2 * b, 2 * b, e);
    set(2 * b + 1, 2 * b + 1, e);
    set(2 * b, 2 * b + 1, one - e);
    set(2 * b + 1, 2 * b, one - e);
  }
  for (int i = 4; i < n; ++i) set(i, i, one);
  return w;
}

CertificateReport block_witness(int n, int depth, Exec exec) {
  if (n < 4) throw std::invalid_argument("the block witness needs n >= 4");
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  const auto w = idempotent_block_matrix(n);
  const auto& target = *w.ambient;
  const auto& t_alpha = target.alphabet();

  CertificateReport report;
  report.claim = "A_s(" + std::to_string(n) + ") is noncommutative and infinite-dimensional";

  // Family instances on W are the images of the defining relations.
  const auto magic = check_magic(w, exec);
  for (const auto& id : magic.identities) {
    auto copy = id;
    copy.label = "W_magic:" + copy.label;
    report.add(std::move(copy));
  }

  const auto u = matrix_alphabet("u", n);
  const NCPoly u11 = NCPoly::generator(u, 0), u33 = NCPoly::generator(u, static_cast<Letter>(2 * n + 2));
  const NCPoly comm = commutator(u11, u33);
  const NCPoly image = target.normal_form(substitute<Rational>(comm, w.entries, MapDirection::homomorphism, t_alpha));
  const NCPoly pq = NCPoly::generator(t_alpha, 0) * NCPoly::generator(t_alpha, 1);
  const NCPoly qp = NCPoly::generator(t_alpha, 1) * NCPoly::generator(t_alpha, 0);
  report.add({"noncommutative[u11,u33]", comm.to_string(), image.to_string(),
              !image.is_zero() && image == pq - qp && target.status().is_confluent(), false});

  const NCPoly u12_image = w(0, 1);
  report.add({"complement_idempotent[u12]", (u12_image * u12_image - u12_image).to_string(),
              target.normal_form(u12_image * u12_image - u12_image).to_string(),
              target.reduces_to_zero(u12_image * u12_image - u12_image), false});

  const auto dims = filtration_dimension(target, depth);
  bool linear = true;
  for (int d = 0; d <= depth; ++d) linear = linear && dims[static_cast<std::size_t>(d)] == static_cast<std::uint64_t>(2 * d + 1);
  std::string seq;
  for (auto v : dims) seq += (seq.empty() ? "" : ",") + std::to_string(v);
  report.add_fact("infinite_dimensional", "filtration dimensions of the target are 2d+1 for d = 0.." +
                                              std::to_string(depth) + ": (" + seq + ")",
                  linear);

  report.details["n"] = n;
  report.details["depth"] = depth;
  report.details["target"] = idempotent_pair_algebra().name;
  report.details["commutator_image"] = image.to_string();
  report.details["filtration_dimensions"] = dims;
  report.finalize();
  return report;
}

CertificateReport pi_n_isomorphism_check(int n, int cap, Exec exec) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const auto hopf = magic_presentation(n);
  const std::size_t order = factorial(n);
  CertificateReport report;
  if (n <= 3)
    report.claim = "pi_" + std::to_string(n) + ": A_s(" + std::to_string(n) + ") -> K(S_" + std::to_string(n) +
                   ") is an isomorphism";
  else if (n == 4)
    report.claim = "pi_4: A_s(4) -> K(S_4) is surjective and not injective";
  else
    report.claim = "pi_" + std::to_string(n) + " is a surjective algebra map";

  const auto products = e_sigma_product_check(n, exec);
  report.add_fact("surjective", "e_sigma = p_{sigma(1)1}...p_{sigma(n)n} for all " + std::to_string(order) +
                                    " permutations",
                  products.verdict == Verdict::verified);

  std::size_t killed = 0;
  std::string first_bad;
  for (const auto& r : hopf.algebra.relations) {
    if (pi_n(r.poly, n, exec).is_zero())
      ++killed;
    else if (first_bad.empty())
      first_bad = r.label;
  }
  report.add_fact("relations_vanish",
                  "all " + std::to_string(hopf.algebra.relations.size()) + " defining relations map to zero" +
                      (first_bad.empty() ? "" : " (fails at " + first_bad + ")"),
                  killed == hopf.algebra.relations.size());

  if (n <= 3) {
    const auto completion = complete_presentation(hopf.algebra, cap);
    const auto& sys = completion.system;
    const bool confluent = completion.status.is_confluent();
    const auto by_length = sys.index().count_irreducible(static_cast<std::size_t>(cap));
    const bool finite = by_length.back() == 0;
    const auto words = finite ? sys.index().irreducible_words(static_cast<std::size_t>(cap), order + 1)
                              : std::vector<Word>{};
    report.add_fact("basis_count", "quotient basis has " + std::to_string(words.size()) + " words, n! = " +
                                       std::to_string(order),
                    confluent && finite && words.size() == order, !confluent);
    std::vector<Vec<Rational>> rows;
    for (const auto& w : words)
      rows.push_back(pi_n(NCPoly::monomial(hopf.alphabet(), w, Rational(1)), n, exec).values());
    const std::size_t r = rank(rows);
    report.add_fact("evaluation_rank", "basis evaluation matrix on S_n has rank " + std::to_string(r),
                    r == order && words.size() == order, !confluent);
    Json basis = Json::array();
    for (const auto& w : words) basis.push_back(w.to_string(*hopf.alphabet()));
    report.details["completion"] = {{"status", completion.status.to_string()}, {"rule_count", sys.rule_count()}};
    report.details["basis"] = std::move(basis);
    report.details["evaluation_rank"] = r;
  } else if (n == 4) {
    const auto u = hopf.alphabet();
    const NCPoly comm = commutator(NCPoly::generator(u, 0), NCPoly::generator(u, 10));
    report.add_fact("kernel_pi_image", "pi_4(" + comm.to_string() + ") is the zero function",
                    pi_n(comm, n, exec).is_zero());
    const auto w = idempotent_block_matrix(4);
    const NCPoly image =
        w.ambient->normal_form(substitute<Rational>(comm, w.entries, MapDirection::homomorphism, w.alphabet()));
    report.add_fact("kernel_nonzero", "block-matrix image of " + comm.to_string() + " is " + image.to_string(),
                    !image.is_zero() && w.ambient->status().is_confluent());
    report.details["kernel_witness"] = comm.to_string();
    report.details["witness_image"] = image.to_string();
  } else {
    report.notes.push_back("n > 4: only surjectivity and vanishing of relations are checked");
  }
  report.details["n"] = n;
  report.details["order"] = order;
  report.finalize();
  return report;
}

}  // namespace qperm
