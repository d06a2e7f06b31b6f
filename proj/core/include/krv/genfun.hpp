#pragma once

// Generating function
//   Z(x_0, x_1) = sum_m prod_a x_{a,1}^{-q_0^(a)} x_{a,0}^{q_1^(a)} prod_{a,j} binom(m_j^(a) + q_j^(a), m_j^(a))
// with q_i^(a) = l^(a) + sum_{j>i} (j - i) (sum_b C_ab m_j^(b) - n_j^(a)), its closed form
//   prod_a x_{a,1} x_{a,k}^{l_a+1} prod_j x_{a,j}^{n_j^(a)} / (x_{a,0} x_{a,k+1}^{l_a+1})
// in Q-system variables, the one-step recursion, the partial factorization at level p,
// and the constant-term lemma. A_1 and simply-laced algebras only.

#include <krv/fermionic.hpp>
#include <krv/laurent_series.hpp>
#include <krv/qsystem.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace krv {

struct ZSpec {
  CartanData cartan;
  Weight lambda;
  KrMultiplicities n;
  int k = 1;

  /// Throws std::invalid_argument unless simply laced, k >= 1, ranks agree and n_j = 0 for j > k.
  void validate() const;
  [[nodiscard]] int rank() const { return cartan.rank(); }
  /// Exponent of x_1 carried by the m = 0 term (per node): sum_j j n_j^(a) - l^(a).
  [[nodiscard]] std::vector<long> top_exponents() const;
  [[nodiscard]] std::string to_string() const;
};

/// m[a][j-1] for 1 <= j <= k.
using ZModes = std::vector<std::vector<int>>;

/// q[a][i] for 0 <= i <= k. Entries with i < p - 1 are meaningless when only
/// the tail m_p..m_k of `m` is populated.
std::vector<std::vector<long>> q_exponents(const ZSpec& spec, const ZModes& m);

/// Product of integer powers of Q-system entries x_{a,i} with an integer coefficient.
class QProduct {
 public:
  QProduct() = default;
  explicit QProduct(Int coeff) : coeff_(std::move(coeff)) {}

  [[nodiscard]] const Int& coefficient() const { return coeff_; }
  [[nodiscard]] const std::map<std::pair<int, int>, long>& exponents() const { return exps_; }
  [[nodiscard]] long exponent(int node, int index) const;

  QProduct& times(int node, int index, long power);
  QProduct& scale(const Int& c);
  /// Renames every atom (a, i) to (a, i + offset).
  [[nodiscard]] QProduct shifted(int offset) const;
  /// Largest Q-system index referenced (-1 when there are no atoms).
  [[nodiscard]] int max_index() const;

  friend QProduct operator*(QProduct a, const QProduct& b);
  friend bool operator==(const QProduct&, const QProduct&) = default;

  /// Numerator and denominator polynomials (positive and negative powers) over the
  /// state's variables; requires every referenced entry to be a Laurent polynomial.
  [[nodiscard]] std::pair<MultivariatePoly, MultivariatePoly> parts(const QSystemState& state) const;
  [[nodiscard]] MultivariateRational evaluate(const QSystemState& state) const;
  [[nodiscard]] std::string to_string() const;

 private:
  Int coeff_ = 1;
  std::map<std::pair<int, int>, long> exps_;
};

/// Closed form as a product of Q-system atoms x_{a,0..k+1}.
QProduct z_closed_factored(const ZSpec& spec);
/// Closed form over the formal boundary variables x_{a,0}, x_{a,1}.
MultivariateRational z_closed(const ZSpec& spec);
/// Closed form evaluated on an existing state (kr boundary gives x_{a,0} = 1).
MultivariateRational z_closed(const ZSpec& spec, const QSystemState& state);

/// Every configuration with all m_j^(a) <= cap, summed exactly over the boundary variables of
/// a fresh state with the given boundary (formal or kr).
MultivariatePoly z_direct_partial(const ZSpec& spec, int cap, Boundary boundary = Boundary::kr);

/// A_1 at x_0 = 1: coefficients of x_1^e for the `order` exponents top, top-1, ..., top-order+1.
/// The window is exact once cap >= (order - 1) / 2, since each configuration sits at
/// exponent top - 2 sum_j j m_j.
LaurentSeries z_direct_truncated(const ZSpec& spec, int mode_cap, std::size_t order);

struct SeriesComparison {
  LaurentSeries direct;
  LaurentSeries closed;
  std::size_t compared = 0;  ///< exponent positions compared
  bool equal = false;
};

/// A_1: z_direct_truncated against expand_at_infinity of the closed form at x_0 = 1.
SeriesComparison compare_direct_with_closed(const ZSpec& spec, std::size_t order);

/// sum_{m < cap} x^{-2m} binom(m + q, m) against the expansion of (x^2 / (x^2 - 1))^{q+1}
/// through the same exponent range. Requires q >= 0 and cap >= q + 5.
bool m1_identity_check(int q_val, int cap);

struct RecursionReport {
  bool shift_certified = false;  ///< the Q-system seeded at (x_1, x_2) reproduces x_{i+1}
  bool factored_equal = false;   ///< both sides agree as products of certified atoms
  std::optional<bool> expanded_equal;  ///< cross-multiplied polynomial identity, when run
  [[nodiscard]] bool holds() const { return shift_certified && factored_equal && expanded_equal.value_or(true); }
};

/// Shared Q-system data for checking the recursion at a fixed algebra and k.
class RecursionVerifier {
 public:
  RecursionVerifier(const CartanData& cartan, int k);
  [[nodiscard]] int k() const { return k_; }
  [[nodiscard]] bool shift_certified() const { return shift_certified_; }
  /// `expand_limit` bounds the estimated term count (product of atom sizes raised
  /// to their exponents) for which the cross-multiplied identity is also checked.
  /// 0 disables it.
  [[nodiscard]] RecursionReport verify(const Weight& lambda, const KrMultiplicities& n, long expand_limit = 0) const;

 private:
  [[nodiscard]] Int expansion_estimate(const QProduct& lhs, const QProduct& pre, const QProduct& inner,
                                       long budget) const;

  CartanData cartan_;
  int k_;
  QSystemState base_;     // formal boundary, atoms x_{a,i}
  QSystemState shifted_;  // seeded with (x_{a,1}, x_{a,2})
  bool shift_certified_ = false;
};

/// Z^{(k)}_{l,n}(x_0,x_1) == x_1^{n_1+2} / (x_0 x_2) * Z^{(k-1)}_{l,(n_2..n_k)}(x_1, x_2). Requires k >= 2.
RecursionReport verify_recursion(const ZSpec& spec, long expand_limit = 1000000);

/// Partial factorization at level p:
///   Z = prod_a x_{a,1} x_{a,p-1} / (x_{a,0} x_{a,p}) prod_{j<p} x_{a,j}^{n_j}
///       * sum_{m_p..m_k} prod_a x_{a,p}^{-q_{p-1}} x_{a,p-1}^{q_p} prod_{j>=p} binom(m_j + q_j, m_j)
class ZPartial {
 public:
  ZPartial(ZSpec spec, int p);
  [[nodiscard]] const ZSpec& spec() const { return spec_; }
  [[nodiscard]] int p() const { return p_; }
  [[nodiscard]] const QProduct& prefactor() const { return prefactor_; }
  /// Tail summand for m_p..m_k (entries of `tail` below index p are ignored).
  [[nodiscard]] QProduct tail_term(const ZModes& tail) const;
  /// prefactor * tail_term
  [[nodiscard]] QProduct term(const ZModes& tail) const { return prefactor_ * tail_term(tail); }

 private:
  ZSpec spec_;
  int p_;
  QProduct prefactor_;
};

ZPartial z_partial(const ZSpec& spec, int p);

struct LemmaCounterexample {
  int p = 0;
  int node = 0;  ///< 0-based
  std::string tail;
  std::string term;
  std::string reason;
};

struct LemmaReport {
  std::string spec;
  int cap = 0;
  std::vector<int> levels;  ///< values of p examined
  std::uint64_t tails = 0;       ///< tail configurations enumerated
  std::uint64_t checked = 0;     ///< (tail, node) pairs with q_p >= 0 and q_{p-1} < 0
  std::uint64_t nonzero = 0;     ///< ... whose binomial coefficient is non-zero
  std::vector<LemmaCounterexample> counterexamples;
  [[nodiscard]] bool ok() const { return counterexamples.empty(); }
  LemmaReport& operator+=(const LemmaReport& o);
};

/// Default tail cap: l + sum_j j n_j + 5 (maximum over nodes).
int default_tail_cap(const ZSpec& spec);

/// At x_0 = 1, every tail term with q_p^(a) >= 0 and q_{p-1}^(a) < 0 carries a positive power of
/// x_{a,1} and no denominator vanishing at x_{a,1} = 0, hence no constant term in x_{a,1}.
/// For A_1 each term is expanded as a Laurent polynomial and checked directly.
LemmaReport constant_term_lemma_check(const ZSpec& spec, int p, int cap);
/// All levels 1 <= p <= k.
LemmaReport constant_term_lemma_check(const ZSpec& spec, int cap);

/// A_1: constant coefficient in x_1 of the closed form at x_0 = 1.
Int constant_term_extract(const ZSpec& spec);

/// The fermionic input matching a spec: same algebra, weight and n, strings limited to length k.
FermionicInput fermionic_input_for(const ZSpec& spec);

}  // namespace krv
