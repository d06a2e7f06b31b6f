#pragma once

#include <krv/integer.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace krv {

inline constexpr std::size_t kMaxVars = 16;
using Exponents = std::array<std::int16_t, kMaxVars>;

/// Immutable, shared list of variable names.
class VarSet {
 public:
  VarSet() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit VarSet(std::vector<std::string> names);

  [[nodiscard]] std::size_t size() const { return names_->size(); }
  [[nodiscard]] const std::string& name(std::size_t i) const { return (*names_)[i]; }
  [[nodiscard]] const std::vector<std::string>& names() const { return *names_; }
  [[nodiscard]] std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Exact multivariate Laurent polynomial with big-integer coefficients.
///
/// Terms are kept sorted by descending lexicographic exponent order with no
/// zero coefficients, so structural equality is polynomial equality.
class MultivariatePoly {
 public:
  struct Term {
    Exponents exps;
    Int coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit MultivariatePoly(VarSet vars) : vars_(std::move(vars)) {}

  static MultivariatePoly constant(VarSet vars, const Int& c);
  static MultivariatePoly variable(VarSet vars, std::size_t index, int power = 1);
  static MultivariatePoly monomial(VarSet vars, const Exponents& exps, const Int& c);

  [[nodiscard]] const VarSet& vars() const { return vars_; }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }
  [[nodiscard]] bool is_constant() const;
  /// True when no exponent is negative.
  [[nodiscard]] bool is_polynomial() const;

  [[nodiscard]] Exponents min_exponents() const;
  [[nodiscard]] int max_degree(std::size_t var) const;
  [[nodiscard]] int min_degree(std::size_t var) const;
  [[nodiscard]] int total_degree() const;

  /// Replaces one variable by an integer. Negative powers are only allowed
  /// for the values +1 and -1.
  [[nodiscard]] MultivariatePoly substitute(std::size_t var, const Int& value) const;
  /// Evaluates at integer values; needs a genuine polynomial unless every
  /// negatively-powered variable is a unit.
  [[nodiscard]] Int evaluate(std::span<const Int> values) const;

  [[nodiscard]] MultivariatePoly pow(unsigned n) const;
  [[nodiscard]] MultivariatePoly times_monomial(const Exponents& exps) const;

  MultivariatePoly& operator+=(const MultivariatePoly& o);
  MultivariatePoly& operator-=(const MultivariatePoly& o);
  friend MultivariatePoly operator+(MultivariatePoly a, const MultivariatePoly& b) { return a += b; }
  friend MultivariatePoly operator-(MultivariatePoly a, const MultivariatePoly& b) { return a -= b; }
  friend MultivariatePoly operator-(MultivariatePoly a);
  friend MultivariatePoly operator*(const MultivariatePoly& a, const MultivariatePoly& b);
  friend MultivariatePoly operator*(MultivariatePoly a, const Int& c);
  friend bool operator==(const MultivariatePoly& a, const MultivariatePoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Canonical text in descending lexicographic order, e.g. "x_1_1^2 - x_2_1".
  [[nodiscard]] std::string to_string() const;

  /// Builds from unsorted terms (merging duplicates, dropping zeros).
  static MultivariatePoly from_terms(VarSet vars, std::vector<Term> terms);

 private:
  void check_same_vars(const MultivariatePoly& o) const;
  VarSet vars_;
  std::vector<Term> terms_;
};

/// Outcome of an exact division a / b.
struct DivisionOutcome {
  std::optional<MultivariatePoly> quotient;  ///< set iff a = b * quotient
  std::optional<MultivariatePoly> remainder; ///< non-zero remainder witness on failure
  [[nodiscard]] bool divisible() const { return quotient.has_value(); }
};

/// Exact division of Laurent polynomials. Throws std::invalid_argument when b is zero.
DivisionOutcome exact_divide(const MultivariatePoly& a, const MultivariatePoly& b);

/// As exact_divide, but stops at the first obstruction and reports no witness.
std::optional<MultivariatePoly> try_exact_divide(const MultivariatePoly& a, const MultivariatePoly& b);

}  // namespace krv
