#include <krv/graded_poly.hpp>
#include <krv/laurent_series.hpp>
#include <krv/mpoly.hpp>
#include <krv/rational_function.hpp>

#include "doctest.h"
#include "oracles.hpp"

#include <stdexcept>

using namespace krv;

namespace {

struct OneVar {
  VarSet vars{std::vector<std::string>{"x"}};
  MultivariatePoly x = MultivariatePoly::variable(vars, 0);
  MultivariatePoly c(long v) const { return MultivariatePoly::constant(vars, v); }
};

struct TwoVar {
  VarSet vars{std::vector<std::string>{"x", "y"}};
  MultivariatePoly x = MultivariatePoly::variable(vars, 0);
  MultivariatePoly y = MultivariatePoly::variable(vars, 1);
  MultivariatePoly c(long v) const { return MultivariatePoly::constant(vars, v); }
};

GradedPoly from_half(const std::map<long, Int>& terms) {
  GradedPoly p;
  for (const auto& [e, c] : terms) p += GradedPoly::half_term(e, c);
  return p;
}

}  // namespace

TEST_CASE("extended binomial") {
  CHECK(binom_ext(3, 2) == 10);
  CHECK(binom_ext(2, -1) == 0);
  CHECK(binom_ext(1, -3) == -2);
  CHECK(binom_ext(0, -7) == 1);
  for (int m = 0; m <= 6; ++m)
    for (long p = -9; p <= 6; ++p) {
      CAPTURE(m);
      CAPTURE(p);
      CHECK(binom_ext(m, p) == oracle::binomial_ext(m, p));
    }
}

TEST_CASE("q-binomial") {
  CHECK(qbinom(2, 2) == GradedPoly::q_power(0) + GradedPoly::q_power(1) + GradedPoly::q_power(2, 2) +
                            GradedPoly::q_power(3) + GradedPoly::q_power(4));
  CHECK(qbinom(5, 0) == GradedPoly::one());
  CHECK(qbinom(0, -4) == GradedPoly::one());
  CHECK(qbinom(1, -3) == -(GradedPoly::q_power(-2) + GradedPoly::q_power(-1)));
  CHECK(qbinom(1, -3).to_string() == "-q^-2 - q^-1");

  SUBCASE("agrees with q-Pascal and the product formula") {
    for (int m = 0; m <= 6; ++m)
      for (long p = -10; p <= 7; ++p) {
        CAPTURE(m);
        CAPTURE(p);
        CHECK(qbinom(m, p) == from_half(oracle::detail::qbinom_half(m, p)));
      }
  }

  SUBCASE("specializes to the extended binomial at q = 1") {
    for (int m = 0; m <= 7; ++m)
      for (long p = -12; p <= 8; ++p) CHECK(qbinom(m, p).value_at_one() == binom_ext(m, p));
  }
}

TEST_CASE("graded polynomial arithmetic and rendering") {
  const auto a = GradedPoly::half_term(1) + GradedPoly::q_power(2, 3);
  const auto b = GradedPoly::one() - GradedPoly::half_term(-1);
  CHECK((a * b).value_at_one() == 0);
  CHECK((a + b - a) == b);
  CHECK(GradedPoly().to_string() == "0");
  CHECK(GradedPoly::one().to_string() == "1");
  CHECK((GradedPoly::q_power(1) + GradedPoly::q_power(2) + GradedPoly::q_power(3)).to_string() == "q + q^2 + q^3");
  CHECK(GradedPoly::half_term(3).to_string() == "q^(3/2)");
  CHECK_FALSE(a.integral_exponents());
  CHECK(b.min_half_exponent() == -1);
  CHECK(a.max_half_exponent() == 4);
}

TEST_CASE("exact division") {
  OneVar v;
  const auto& x = v.x;
  auto q = exact_divide(x.pow(4) - x.pow(2) * Int(2), x);
  REQUIRE(q.divisible());
  CHECK(*q.quotient == x.pow(3) - x * Int(2));

  auto r = exact_divide(x.pow(2) - v.c(1), x - v.c(1));
  REQUIRE(r.divisible());
  CHECK(*r.quotient == x + v.c(1));

  auto f = exact_divide(x.pow(2) + v.c(1), x + v.c(1));
  CHECK_FALSE(f.divisible());
  REQUIRE(f.remainder.has_value());
  CHECK_FALSE(f.remainder->is_zero());

  CHECK_THROWS_AS(exact_divide(x, v.c(0)), std::invalid_argument);

  SUBCASE("multivariate products divide back exactly") {
    TwoVar w;
    const auto a = w.x.pow(3) - w.x * w.y * Int(4) + w.c(7);
    const auto b = w.y.pow(2) * Int(3) - w.x + w.c(1);
    const auto out = exact_divide(a * b, b);
    REQUIRE(out.divisible());
    CHECK(*out.quotient == a);
    CHECK_FALSE(exact_divide(a * b + w.c(1), b).divisible());
  }
}

TEST_CASE("multivariate polynomial basics") {
  TwoVar w;
  const auto p = w.x.pow(2) * w.y - w.y * Int(2) + w.c(5);
  CHECK(p.size() == 3);
  CHECK(p.total_degree() == 3);
  CHECK(p.max_degree(0) == 2);
  CHECK(p.min_degree(0) == 0);
  CHECK(p.is_polynomial());
  const std::vector<Int> at{3, 2};
  CHECK(p.evaluate(at) == 18 - 4 + 5);
  CHECK(p.substitute(1, 0) == w.c(5));
  CHECK((p - p).is_zero());
  CHECK(p.to_string() == "x^2*y - 2*y + 5");
}

TEST_CASE("rational functions reduce to a canonical form") {
  TwoVar w;
  const MultivariateRational f(w.x.pow(2) - w.c(1), w.x - w.c(1));
  CHECK(f.is_laurent_polynomial());
  CHECK(f.as_laurent_polynomial() == w.x + w.c(1));
  const MultivariateRational g(w.c(1), w.y);
  CHECK((g * MultivariateRational(w.y)) == MultivariateRational::constant(w.vars, 1));
  CHECK((f - f).is_zero());
  CHECK(((f / g) * g) == f);
  CHECK_THROWS(MultivariateRational(w.x, w.c(0)));
}

TEST_CASE("expansion at infinity") {
  OneVar v;
  const auto& x = v.x;
  SUBCASE("geometric") {
    const auto s = expand_at_infinity(MultivariateRational(x.pow(6), x.pow(2) - v.c(1)), 0, 9);
    CHECK(s.leading_exponent() == 4);
    CHECK(s.to_string() == "x^4 + x^2 + 1 + x^-2 + x^-4 + O(x^-5)");
  }
  SUBCASE("closed form of a small generating function") {
    const auto s = expand_at_infinity(MultivariateRational(x.pow(7) - x.pow(5), x.pow(3) - x * Int(2)), 0, 7);
    CHECK(s.coefficient(4) == 1);
    CHECK(s.coefficient(2) == 1);
    CHECK(s.coefficient(0) == 2);
    CHECK(s.coefficient(-2) == 4);
    CHECK(s.coefficient(3) == 0);
  }
  SUBCASE("polynomials expand to themselves") {
    const auto p = x.pow(3) * Int(5) - x + v.c(2);
    const auto s = expand_at_infinity_to(MultivariateRational(p), 0, 0);
    CHECK(s.to_string() == "5*x^3 - x + 2 + O(x^-1)");
  }
  SUBCASE("rational coefficients stay exact") {
    const auto s = expand_at_infinity(MultivariateRational(v.c(1), x * Int(2) - v.c(1)), 0, 4);
    CHECK(s.coefficient(-1) == Rational(1, 2));
    CHECK(s.coefficient(-3) == Rational(1, 8));
    CHECK_FALSE(s.integral());
  }
  SUBCASE("series against the oracle binomials") {
    // (x^2/(x^2-1))^{q+1} = sum_m binom(m+q, m) x^{-2m}
    for (int qv = 0; qv <= 4; ++qv) {
      const auto f = MultivariateRational(x.pow(2), x.pow(2) - v.c(1)).pow(qv + 1);
      const auto s = expand_at_infinity(f, 0, 15);
      for (int m = 0; m <= 7; ++m) CHECK(s.coefficient(-2 * m) == Rational(oracle::binomial(m + qv, m)));
    }
  }
}
