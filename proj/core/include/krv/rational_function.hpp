#pragma once

#include <krv/mpoly.hpp>

#include <string>

namespace krv {

/// Quotient of two Laurent polynomials over the same variables.
///
/// No gcd normal form is maintained. After each operation the value is
/// simplified only when that is cheap and exact: a monomial denominator is
/// absorbed into the numerator, and a denominator that divides the numerator
/// exactly is cleared. Equality is decided by cross-multiplication.
class MultivariateRational {
 public:
  explicit MultivariateRational(const MultivariatePoly& numerator);
  MultivariateRational(MultivariatePoly numerator, MultivariatePoly denominator);

  static MultivariateRational constant(const VarSet& vars, const Int& c) {
    return MultivariateRational(MultivariatePoly::constant(vars, c));
  }

  [[nodiscard]] const MultivariatePoly& numerator() const { return num_; }
  [[nodiscard]] const MultivariatePoly& denominator() const { return den_; }
  [[nodiscard]] const VarSet& vars() const { return num_.vars(); }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator is the constant 1 (the value is a Laurent polynomial).
  [[nodiscard]] bool is_laurent_polynomial() const;
  [[nodiscard]] const MultivariatePoly& as_laurent_polynomial() const;

  /// Integer power; negative exponents invert.
  [[nodiscard]] MultivariateRational pow(int n) const;
  [[nodiscard]] MultivariateRational inverse() const;
  [[nodiscard]] MultivariateRational substitute(std::size_t var, const Int& value) const;

  MultivariateRational& operator+=(const MultivariateRational& o);
  MultivariateRational& operator-=(const MultivariateRational& o);
  MultivariateRational& operator*=(const MultivariateRational& o);
  MultivariateRational& operator/=(const MultivariateRational& o);
  friend MultivariateRational operator+(MultivariateRational a, const MultivariateRational& b) { return a += b; }
  friend MultivariateRational operator-(MultivariateRational a, const MultivariateRational& b) { return a -= b; }
  friend MultivariateRational operator*(MultivariateRational a, const MultivariateRational& b) { return a *= b; }
  friend MultivariateRational operator/(MultivariateRational a, const MultivariateRational& b) { return a /= b; }

  /// a/b == c/d  iff  a*d == c*b.
  friend bool operator==(const MultivariateRational& x, const MultivariateRational& y);

  [[nodiscard]] std::string to_string() const;

 private:
  void simplify();
  MultivariatePoly num_;
  MultivariatePoly den_;
};

}  // namespace krv
