#pragma once

// Symbolic Q-system iteration.
//
//   x_{a,i+1} x_{a,i-1} = x_{a,i}^2 - prod_{b: C_ab < 0} prod_{j=0}^{-C_ab - 1} x_{b, floor((|C_ba| i + j) / |C_ab|)}
//
// For simply-laced algebras the product is over neighbours b with x_{b,i}.
// Entries live over the variables x_{a,0}, x_{a,1}; the kr boundary fixes
// x_{a,0} = 1, under which every entry is a polynomial in the x_{b,1}.

#include <krv/liealg.hpp>
#include <krv/mpoly.hpp>
#include <krv/rational_function.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace krv {

enum class Boundary { formal, kr, custom };
/// Which Cartan entries drive the floor indices. Only `standard` is certified;
/// `transposed` swaps C_ab and C_ba for experiments.
enum class QConvention { standard, transposed };

std::string to_string(Boundary b);
std::string to_string(QConvention c);

/// Outcome of the division step that produced x_{a,i}.
struct DivisionCertificate {
  int node = 0;   ///< 0-based
  int index = 0;  ///< i of the produced entry
  bool exact = false;       ///< quotient is a Laurent polynomial
  bool polynomial = false;  ///< ... with no negative exponents
  std::string remainder;    ///< non-zero remainder witness when not exact
};

/// "x_<a>_<i>" with a 1-based.
std::string qsystem_variable_name(int node, int index);

class QSystemState {
 public:
  /// Depth-1 state: x_{a,0} and x_{a,1} for every node.
  static QSystemState initial(const CartanData& cartan, Boundary boundary,
                              QConvention convention = QConvention::standard);
  /// Depth-1 state seeded with arbitrary values for x_{a,0} and x_{a,1}.
  static QSystemState with_initial_values(const CartanData& cartan, std::vector<MultivariateRational> x0,
                                          std::vector<MultivariateRational> x1,
                                          QConvention convention = QConvention::standard);

  [[nodiscard]] const CartanData& cartan() const { return cartan_; }
  [[nodiscard]] Boundary boundary() const { return boundary_; }
  [[nodiscard]] QConvention convention() const { return convention_; }
  [[nodiscard]] int depth() const { return depth_; }
  [[nodiscard]] const VarSet& vars() const { return vars_; }
  /// Index of x_{a,i} (i in {0,1}) in vars() for the formal and kr boundaries.
  [[nodiscard]] std::size_t var_index(int node, int index) const;

  [[nodiscard]] bool has(int node, int index) const;
  /// Computed entry; throws std::out_of_range when it has not been reached.
  [[nodiscard]] const MultivariateRational& at(int node, int index) const;
  /// Largest computed index for the node (>= depth; short nodes may reach further).
  [[nodiscard]] int reach(int node) const;

  /// One certificate per computed entry with index >= 2, ordered by (node, index).
  [[nodiscard]] std::vector<DivisionCertificate> certificates() const;
  [[nodiscard]] bool all_exact() const;

  /// New state with every node extended to depth + 1.
  [[nodiscard]] QSystemState extended() const;
  /// Convenience: extend until depth() == target.
  [[nodiscard]] QSystemState extended_to(int target) const;

  /// Checks x_{a,i+1} x_{a,i-1} == x_{a,i}^2 - prod(...) for every computed i >= 1.
  [[nodiscard]] bool recursion_holds() const;

 private:
  QSystemState(CartanData cartan, Boundary boundary, QConvention convention, VarSet vars);

  using Key = std::pair<int, int>;
  struct Entry {
    std::shared_ptr<const MultivariateRational> value;
    std::optional<DivisionCertificate> certificate;
  };

  [[nodiscard]] int entry(int a, int b) const;  // Cartan entry under the active convention
  [[nodiscard]] std::vector<Key> coupling_factors(int a, int i) const;
  void ensure(int node, int index);
  [[nodiscard]] MultivariateRational coupling_product(int a, int i) const;

  CartanData cartan_;
  Boundary boundary_;
  QConvention convention_;
  VarSet vars_;
  int depth_ = 1;
  std::map<Key, Entry> table_;
};

QSystemState qsystem_extend(const QSystemState& state);

struct PolynomialityEntry {
  int node = 0;  ///< 0-based
  int index = 0;
  bool exact = false;
  bool polynomial = false;
  int degree = 0;
  std::size_t terms = 0;
  std::string remainder;
};

struct PolynomialityReport {
  std::string algebra;
  int depth = 0;
  QConvention convention = QConvention::standard;
  std::vector<PolynomialityEntry> entries;
  std::size_t failures = 0;
  [[nodiscard]] bool all_polynomial() const { return failures == 0; }
};

/// Iterates the kr-boundary Q-system to `depth` and certifies every division step.
PolynomialityReport verify_polynomiality(const CartanData& cartan, int depth,
                                         QConvention convention = QConvention::standard);

struct ChebyshevReport {
  int depth = 0;
  bool three_term = true;
  bool conserved = true;   ///< x_{i+1} x_{i-1} - x_i^2 == -1
  bool dimensions = true;  ///< x_i(2) == i + 1
  std::vector<std::pair<int, Int>> values_at_two;
  [[nodiscard]] bool ok() const { return three_term && conserved && dimensions; }
};

ChebyshevReport a1_chebyshev_report(int depth);
bool a1_chebyshev_check(int depth);

struct DimensionEntry {
  int node = 0;  ///< 0-based
  int index = 0;
  Int value;
  Int expected;
};

struct DimensionReport {
  std::string algebra;
  int depth = 0;
  std::vector<DimensionEntry> entries;
  [[nodiscard]] bool all_match() const;
};

/// Type A only: x_{a,i} evaluated at x_{b,1} = dim V(omega_b) against dim V(i omega_a).
DimensionReport character_dimension_check(const CartanData& cartan, int depth);

}  // namespace krv
