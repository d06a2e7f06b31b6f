#include <krv/rational_function.hpp>

#include <stdexcept>

namespace krv {

MultivariateRational::MultivariateRational(const MultivariatePoly& numerator)
    : num_(numerator), den_(MultivariatePoly::constant(numerator.vars(), 1)) {}

MultivariateRational::MultivariateRational(MultivariatePoly numerator, MultivariatePoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (!(num_.vars() == den_.vars())) throw std::invalid_argument("numerator and denominator variables differ");
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  simplify();
}

bool MultivariateRational::is_laurent_polynomial() const {
  return den_.is_constant() && !den_.is_zero() && den_.terms().front().coeff == 1;
}

const MultivariatePoly& MultivariateRational::as_laurent_polynomial() const {
  if (!is_laurent_polynomial()) throw std::logic_error("rational function is not a Laurent polynomial");
  return num_;
}

void MultivariateRational::simplify() {
  if (num_.is_zero()) {
    den_ = MultivariatePoly::constant(num_.vars(), 1);
    return;
  }
  if (den_.is_monomial()) {
    const auto& t = den_.terms().front();
    bool divisible = true;
    for (const auto& nt : num_.terms())
      if (nt.coeff % t.coeff != 0) {
        divisible = false;
        break;
      }
    Exponents inv{};
    for (std::size_t i = 0; i < kMaxVars; ++i) inv[i] = static_cast<std::int16_t>(-t.exps[i]);
    if (divisible) {
      std::vector<MultivariatePoly::Term> terms;
      for (const auto& nt : num_.terms()) terms.push_back({nt.exps, nt.coeff / t.coeff});
      num_ = MultivariatePoly::from_terms(num_.vars(), std::move(terms)).times_monomial(inv);
      den_ = MultivariatePoly::constant(num_.vars(), 1);
    } else {
      num_ = num_.times_monomial(inv);
      Int c = t.coeff;
      if (c < 0) {
        num_ = -num_;
        c = -c;
      }
      den_ = MultivariatePoly::constant(num_.vars(), c);
    }
    return;
  }
  if (auto q = try_exact_divide(num_, den_)) {
    num_ = std::move(*q);
    den_ = MultivariatePoly::constant(num_.vars(), 1);
  }
}

MultivariateRational MultivariateRational::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  MultivariateRational out(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
  return out;
}

MultivariateRational MultivariateRational::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of the zero rational function");
  return MultivariateRational(den_, num_);
}

MultivariateRational MultivariateRational::substitute(std::size_t var, const Int& value) const {
  auto d = den_.substitute(var, value);
  if (d.is_zero()) throw std::domain_error("denominator vanishes after substitution");
  return MultivariateRational(num_.substitute(var, value), std::move(d));
}

MultivariateRational& MultivariateRational::operator+=(const MultivariateRational& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  simplify();
  return *this;
}

MultivariateRational& MultivariateRational::operator-=(const MultivariateRational& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
  }
  simplify();
  return *this;
}

MultivariateRational& MultivariateRational::operator*=(const MultivariateRational& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  simplify();
  return *this;
}

MultivariateRational& MultivariateRational::operator/=(const MultivariateRational& o) {
  if (o.num_.is_zero()) throw std::domain_error("division by the zero rational function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  simplify();
  return *this;
}

bool operator==(const MultivariateRational& x, const MultivariateRational& y) {
  if (x.den_ == y.den_) return x.num_ == y.num_;
  return x.num_ * y.den_ == y.num_ * x.den_;
}

std::string MultivariateRational::to_string() const {
  if (is_laurent_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace krv
