#pragma once

// Restricted (M) and unrestricted (N) fermionic sums over mode configurations.
//
// A mode configuration assigns m_i^(a) >= 0 strings of length i and colour a,
// subject to sum_i i * m_i^(a) = m^(a), where the totals m^(a) solve the
// zero-weight condition  sum_b C_ab m^(b) = sum_j j n_j^(a) - l^(a).
// Each configuration contributes
//     q^Q(m,n) * prod_{a,i} [m_i^(a) + P_i^(a), m_i^(a)]_q
// with vacancy numbers P_i^(a) = sum_j min(i,j) n_j^(a) - sum_{b,j} B^{ab}_{ij} m_j^(b).
// The M-sum keeps configurations with non-negative vacancies, the N-sum keeps all.

#include <krv/graded_poly.hpp>
#include <krv/liealg.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace krv {

enum class Grading { paper, cocharge };
enum class VacancyScope { all_indices, occupied_only };

std::string to_string(Grading g);
std::string to_string(VacancyScope s);
Grading parse_grading(std::string_view text);
VacancyScope parse_vacancy_scope(std::string_view text);

/// n_j^(a): how many copies of KR_{a,j} appear in the tensor product.
class KrMultiplicities {
 public:
  explicit KrMultiplicities(int rank = 0) : counts_(static_cast<std::size_t>(rank)) {}

  /// Parses "a:j=count;..." with 1-based node labels; the empty string is the empty product.
  static KrMultiplicities parse(std::string_view text, int rank);

  [[nodiscard]] int rank() const { return static_cast<int>(counts_.size()); }
  /// a is 0-based, j >= 1.
  [[nodiscard]] int at(int a, int j) const;
  void set(int a, int j, int count);
  void add(int a, int j, int count = 1) { set(a, j, at(a, j) + count); }

  [[nodiscard]] bool empty() const;
  /// Largest j with a non-zero count (0 when empty).
  [[nodiscard]] int max_length() const;
  [[nodiscard]] int max_length(int a) const;
  /// sum_{a,j} j * n_j^(a)
  [[nodiscard]] long load() const;
  /// sum_{a,j} j * n_j^(a) * omega_a
  [[nodiscard]] Weight top_weight() const;
  /// (a, j, count) with a 0-based, in increasing (a, j) order.
  [[nodiscard]] std::vector<std::tuple<int, int, int>> entries() const;

  /// Canonical "1:1=3;2:2=1" (1-based nodes); "" when empty.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const KrMultiplicities& x, const KrMultiplicities& y) {
    return x.to_string() == y.to_string() && x.rank() == y.rank();
  }

 private:
  std::vector<std::vector<int>> counts_;  // counts_[a][j-1]
};

struct FermionicInput {
  CartanData cartan;
  Weight lambda;
  KrMultiplicities n;
  Grading grading = Grading::paper;
  VacancyScope vacancy_scope = VacancyScope::all_indices;
  /// When set, strings longer than this are excluded (m_i = 0 for i > bound).
  std::optional<int> max_string_length;
};

struct ModeTotals {
  std::vector<int> m;
  friend bool operator==(const ModeTotals&, const ModeTotals&) = default;
};

class ModeConfig {
 public:
  ModeConfig() = default;
  /// counts[a][i-1] = m_i^(a)
  explicit ModeConfig(std::vector<std::vector<int>> counts) : counts_(std::move(counts)) {}

  [[nodiscard]] int rank() const { return static_cast<int>(counts_.size()); }
  /// m_i^(a), zero outside the stored range.
  [[nodiscard]] int count(int a, int i) const;
  [[nodiscard]] const std::vector<int>& row(int a) const { return counts_[static_cast<std::size_t>(a)]; }
  /// sum_i i * m_i^(a)
  [[nodiscard]] int total(int a) const;
  /// Longest occupied string over all colours (0 for the empty configuration).
  [[nodiscard]] int max_part() const;
  [[nodiscard]] bool empty() const { return max_part() == 0; }
  /// "a:i=count;..." over occupied entries, 1-based colours.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const ModeConfig&, const ModeConfig&) = default;

 private:
  std::vector<std::vector<int>> counts_;
};

/// Exact half-integer, stored as twice its value.
struct HalfInteger {
  std::int64_t twice = 0;
  friend auto operator<=>(const HalfInteger&, const HalfInteger&) = default;
  [[nodiscard]] std::string to_string() const;
};

/// Unique non-negative integral solution of the zero-weight condition, if any.
std::optional<ModeTotals> solve_weight_condition(const CartanData& cartan, const Weight& lambda,
                                                 const KrMultiplicities& n);

/// P_i^(a) for 0-based colour a and length i >= 1.
long vacancy(const CartanData& cartan, const KrMultiplicities& n, const ModeConfig& config, int a, int i);

/// Q(m,n) under the chosen grading convention.
HalfInteger energy(const CartanData& cartan, const KrMultiplicities& n, const ModeConfig& config, Grading grading);

/// Index past which every vacancy number is constant (equal to l^(a) on solutions):
/// (largest occupied length) * max |C_ab| + (largest length in n).
int tail_check_index(const CartanData& cartan, const KrMultiplicities& n, const ModeConfig& config);

/// Visits every configuration with the given totals exactly once, ordered
/// lexicographically by (colour, partition), partitions listed largest part first.
void for_each_mode_config(const ModeTotals& totals, std::optional<int> max_length,
                          const std::function<void(const ModeConfig&)>& visit);
std::vector<ModeConfig> enumerate_modes(const ModeTotals& totals, std::optional<int> max_length = std::nullopt);

/// Does the configuration survive the vacancy restriction of the M-sum?
bool passes_restriction(const CartanData& cartan, const KrMultiplicities& n, const ModeConfig& config,
                        VacancyScope scope);

struct TermStats {
  std::uint64_t total = 0;       ///< configurations summed by N
  std::uint64_t restricted = 0;  ///< configurations kept by M
  std::uint64_t cancelled = 0;   ///< total - restricted
  std::uint64_t nonzero_dropped = 0;  ///< dropped configurations whose term is non-zero
};

/// Both sums under both gradings, from one pass over the configurations.
struct FermionicSums {
  std::optional<ModeTotals> totals;
  GradedPoly m_paper, n_paper, m_cocharge, n_cocharge;
  Int m_at_one = 0, n_at_one = 0;
  TermStats stats;
  [[nodiscard]] const GradedPoly& m(Grading g) const { return g == Grading::paper ? m_paper : m_cocharge; }
  [[nodiscard]] const GradedPoly& n(Grading g) const { return g == Grading::paper ? n_paper : n_cocharge; }
};

/// When `graded` is false only the q = 1 values and statistics are filled.
FermionicSums fermionic_sums(const FermionicInput& input, bool graded = true);

GradedPoly m_sum(const FermionicInput& input);
GradedPoly n_sum(const FermionicInput& input);

struct IdentityReport {
  GradedPoly m;
  GradedPoly n;
  Int m_at_one = 0;
  Int n_at_one = 0;
  bool equal_graded = false;
  bool equal_at_1 = false;
  TermStats counts;
  std::optional<ModeTotals> totals;
  std::int64_t elapsed_us = 0;
};

IdentityReport verify_mn(const FermionicInput& input);

}  // namespace krv
