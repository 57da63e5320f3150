#include "qperm/gradings/classify.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

#include "qperm/cost_guard.hpp"

namespace qperm {

namespace {

void partitions_into(int n, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_into(n - part, part, current, out);
    current.pop_back();
  }
}

std::string groups_string(const std::vector<FiniteAbelianGroup>& groups) {
  std::string s;
  for (std::size_t i = 0; i < groups.size(); ++i) s += (i ? "*" : "") + groups[i].to_string();
  return s;
}

std::string partition_string(const std::vector<int>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

ClassifiedGrading examine(const std::vector<int>& partition, const std::vector<FiniteAbelianGroup>& groups,
                          const Grading& grading) {
  ClassifiedGrading c;
  c.partition = partition;
  c.groups = groups;
  const auto verified = verify_grading(grading, Exec::serial);
  c.verdict = verified.verdict;
  c.ergodic = verified.details["ergodic"].get<bool>();
  const auto orbits = orbit_decompose(grading);
  c.k = orbits.k;
  c.round_trip = orbits.partition == partition && orbits.k == static_cast<int>(partition.size());
  return c;
}

Json entry_json(const ClassifiedGrading& c) {
  Json j;
  j["partition"] = c.partition;
  j["groups"] = groups_string(c.groups);
  j["verdict"] = to_string(c.verdict);
  j["ergodic"] = c.ergodic;
  j["dim_identity_component"] = c.k;
  j["round_trip"] = c.round_trip;
  return j;
}

}  // namespace

std::vector<std::vector<int>> integer_partitions(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  partitions_into(n, n, current, out);
  return out;
}

Classification classify_gradings(int n, bool ergodic_only, int limit, Exec exec) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > limit)
    throw CostGuardError("classification is limited to n <= " + std::to_string(limit),
                         "raise the limit with --max-n if the cyclotomic linear algebra is affordable");
  Classification out;
  out.n = n;

  for (const auto& g : abelian_groups_of_order(static_cast<unsigned>(n)))
    out.ergodic.push_back(examine({n}, {g}, grading_from_regular_abelian(g)));

  if (!ergodic_only) {
    std::vector<std::pair<std::vector<int>, std::vector<FiniteAbelianGroup>>> jobs;
    for (const auto& p : integer_partitions(n)) {
      std::vector<std::vector<FiniteAbelianGroup>> choices;
      for (int m : p) choices.push_back(abelian_groups_of_order(static_cast<unsigned>(m)));
      std::vector<std::size_t> pick(p.size(), 0);
      while (true) {
        std::vector<FiniteAbelianGroup> gs;
        for (std::size_t i = 0; i < p.size(); ++i) gs.push_back(choices[i][pick[i]]);
        jobs.emplace_back(p, std::move(gs));
        std::size_t i = p.size();
        while (i > 0 && ++pick[i - 1] == choices[i - 1].size()) pick[--i] = 0;
        if (i == 0) break;
      }
    }
    out.general.resize(jobs.size());
    std::exception_ptr error;
    auto run = [&](std::size_t j) {
      out.general[j] = examine(jobs[j].first, jobs[j].second, grading_from_partition(jobs[j].first, jobs[j].second));
    };
    if (exec == Exec::serial) {
      for (std::size_t j = 0; j < jobs.size(); ++j) run(j);
    } else {
      const auto count = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
      for (long j = 0; j < count; ++j) {
        try {
          run(static_cast<std::size_t>(j));
        } catch (...) {
#pragma omp critical(qperm_classify_error)
          if (!error) error = std::current_exception();
        }
      }
    }
    if (error) std::rethrow_exception(error);
  }

  auto& r = out.report;
  r.claim = "gradings of K^" + std::to_string(n) + " by transitive abelian groups and their free products";
  for (const auto& c : out.ergodic)
    r.add_fact("ergodic[" + groups_string(c.groups) + "]",
               "regular " + groups_string(c.groups) + "-grading is verified, ergodic and round-trips",
               c.verdict == Verdict::verified && c.ergodic && c.round_trip, c.verdict == Verdict::inconclusive);
  for (const auto& c : out.general)
    r.add_fact("partition" + partition_string(c.partition) + "[" + groups_string(c.groups) + "]",
               "faithful grading verified, dim A_1 = " + std::to_string(c.k) + ", orbit decomposition recovers " +
                   partition_string(c.partition),
               c.verdict == Verdict::verified && c.round_trip, c.verdict == Verdict::inconclusive);

  Json erg = Json::array(), gen = Json::array();
  for (const auto& c : out.ergodic) erg.push_back(entry_json(c));
  for (const auto& c : out.general) gen.push_back(entry_json(c));
  r.details["n"] = n;
  r.details["ergodic_count"] = out.ergodic.size();
  r.details["ergodic"] = std::move(erg);
  if (!ergodic_only) {
    r.details["grading_count"] = out.general.size();
    r.details["general"] = std::move(gen);
  }
  r.details["conclusion"] =
      "every cocommutative cosemisimple quotient of A_s(" + std::to_string(n) +
      ",K) is K[G] for G a quotient of a free product G_1 * ... * G_k of transitive abelian groups "
      "G_i in S_{m_i}, m_1 + ... + m_k = " + std::to_string(n) + "; the free products above are the universal objects";
  r.notes.push_back("quotients G of the free products are not enumerated");
  r.finalize();
  return out;
}

}  // namespace qperm
