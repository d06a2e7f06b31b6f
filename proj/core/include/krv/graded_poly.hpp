#pragma once

#include <krv/integer.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace krv {

/// Exact Laurent polynomial in q^(1/2).
///
/// Exponents are stored as integer multiples of 1/2 ("half exponents"), so
/// q^3 is stored under key 6 and q^(1/2) under key 1. Zero coefficients are
/// never stored.
class GradedPoly {
 public:
  using Terms = std::map<std::int64_t, Int>;

  GradedPoly() = default;

  static GradedPoly constant(const Int& c) { return half_term(0, c); }
  static GradedPoly one() { return constant(1); }
  /// c * q^(half_exponent / 2)
  static GradedPoly half_term(std::int64_t half_exponent, const Int& c = 1);
  /// c * q^exponent
  static GradedPoly q_power(std::int64_t exponent, const Int& c = 1) { return half_term(2 * exponent, c); }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  /// Coefficient of q^(half_exponent / 2).
  [[nodiscard]] Int coefficient_half(std::int64_t half_exponent) const;
  [[nodiscard]] Int value_at_one() const;
  [[nodiscard]] bool nonnegative_coefficients() const;
  [[nodiscard]] bool integral_exponents() const;
  [[nodiscard]] std::int64_t min_half_exponent() const;
  [[nodiscard]] std::int64_t max_half_exponent() const;

  /// Multiplies by q^(half_shift / 2).
  [[nodiscard]] GradedPoly shifted_half(std::int64_t half_shift) const;

  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  GradedPoly& operator*=(const GradedPoly& o) { return *this = *this * o; }
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator-(const GradedPoly& a);
  friend bool operator==(const GradedPoly&, const GradedPoly&) = default;

  /// Canonical text: ascending exponents, explicit signs, e.g. "1 + q + 2*q^2 - q^(5/2)".
  [[nodiscard]] std::string to_string() const;

 private:
  void add_term(std::int64_t half_exponent, const Int& c);
  Terms terms_;
};

/// binom(m+p, m) = (m+p)(m+p-1)...(p+1)/m!, defined for every integer p.
/// Vanishes for -m <= p <= -1 and carries the sign (-1)^m for p < -m.
Int binom_ext(int m, std::int64_t p);

/// prod_{i=1}^{m} (1 - q^{p+i}) / (1 - q^i), exact for every integer p.
GradedPoly qbinom(int m, std::int64_t p);

}  // namespace krv
