#pragma once

#include <krv/integer.hpp>
#include <krv/rational_function.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace krv {

/// Truncated expansion in descending powers of one variable:
///   sum_{j < order} c_j * t^(leading - j)
class LaurentSeries {
 public:
  LaurentSeries(std::string variable, std::int64_t leading, std::vector<Rational> coeffs)
      : variable_(std::move(variable)), leading_(leading), coeffs_(std::move(coeffs)) {}

  [[nodiscard]] const std::string& variable() const { return variable_; }
  [[nodiscard]] std::int64_t leading_exponent() const { return leading_; }
  /// Lowest exponent that is still known exactly.
  [[nodiscard]] std::int64_t lowest_exponent() const {
    return leading_ - static_cast<std::int64_t>(coeffs_.size()) + 1;
  }
  [[nodiscard]] std::size_t order() const { return coeffs_.size(); }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Coefficient of t^exponent; exponents above the leading one are zero,
  /// exponents below the truncation throw std::out_of_range.
  [[nodiscard]] Rational coefficient(std::int64_t exponent) const;
  [[nodiscard]] bool integral() const;
  [[nodiscard]] LaurentSeries truncated(std::size_t order) const;

  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

  /// "x^4 + x^2 + 2 + 4*x^-2 + O(x^-3)"
  [[nodiscard]] std::string to_string() const;

 private:
  std::string variable_;
  std::int64_t leading_;
  std::vector<Rational> coeffs_;
};

/// Expands a rational function of the single variable `var` at infinity,
/// keeping `order` consecutive exponent positions starting at the leading one.
/// Every other variable must be absent. Throws std::domain_error on a zero
/// denominator and std::invalid_argument on a genuinely multivariate input.
LaurentSeries expand_at_infinity(const MultivariateRational& f, std::size_t var, std::size_t order);

/// Same expansion, continued down to (and including) exponent `lowest`.
LaurentSeries expand_at_infinity_to(const MultivariateRational& f, std::size_t var, std::int64_t lowest);

}  // namespace krv
