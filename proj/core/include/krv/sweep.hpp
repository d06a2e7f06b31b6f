#pragma once

// Identity-sweep cases: every multiplicity array up to a load bound, paired with
// every dominant weight for which the zero-weight condition is solvable.

#include <krv/charoracle.hpp>
#include <krv/fermionic.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace krv {

struct SweepCase {
  KrMultiplicities n;
  Weight lambda;
  /// "n=<canonical n>|lambda=<weight>"
  [[nodiscard]] std::string key() const;
};

/// All n with sum_{a,j} j n_j^(a) <= max_load, in a fixed order (the empty array first).
std::vector<KrMultiplicities> multiplicities_up_to_load(int rank, int max_load);

/// Dominant lambda = top(n) - C m for some integral m >= 0, in increasing order.
std::vector<Weight> reachable_weights(const CartanData& cartan, const KrMultiplicities& n);

std::vector<SweepCase> exhaustive_cases(const CartanData& cartan, int max_load);

/// `count` distinct cases drawn uniformly without replacement from the exhaustive list
/// (all of them when count >= size), returned in exhaustive order. Deterministic in seed.
std::vector<SweepCase> sampled_cases(const CartanData& cartan, int max_load, std::size_t count, std::uint64_t seed);

struct CaseResult {
  SweepCase input;
  IdentityReport paper;     ///< paper grading
  GradedPoly m_cocharge;
  GradedPoly n_cocharge;
  std::optional<Int> oracle;  ///< type A only
  [[nodiscard]] bool equal_at_1() const { return paper.equal_at_1; }
  [[nodiscard]] bool graded_equal(Grading g) const;
  [[nodiscard]] bool oracle_ok() const { return !oracle || *oracle == paper.m_at_one; }
  [[nodiscard]] bool passed() const { return equal_at_1() && oracle_ok(); }
};

struct CaseOptions {
  VacancyScope vacancy_scope = VacancyScope::all_indices;
  bool graded = true;
  bool oracle = true;  ///< ignored outside type A
  OracleLimits limits;
};

CaseResult run_case(const CartanData& cartan, const SweepCase& c, const CaseOptions& options = {});

/// Type A: sum_lambda M(1) dim V(lambda) == prod_{a,j} dim V(j omega_a)^{n_j^(a)} over the reachable weights.
struct SumRule {
  Int lhs;
  Int rhs;
  [[nodiscard]] bool holds() const { return lhs == rhs; }
};
SumRule dimension_sum_rule(const CartanData& cartan, const KrMultiplicities& n);

}  // namespace krv
