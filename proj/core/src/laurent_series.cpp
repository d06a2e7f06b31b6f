#include <krv/laurent_series.hpp>

#include <map>
#include <stdexcept>

namespace krv {

Rational LaurentSeries::coefficient(std::int64_t exponent) const {
  if (exponent > leading_) return Rational(0);
  if (exponent < lowest_exponent()) throw std::out_of_range("exponent below the series truncation");
  return coeffs_[static_cast<std::size_t>(leading_ - exponent)];
}

bool LaurentSeries::integral() const {
  for (const auto& c : coeffs_)
    if (boost::multiprecision::denominator(c) != 1) return false;
  return true;
}

LaurentSeries LaurentSeries::truncated(std::size_t order) const {
  if (order > coeffs_.size()) throw std::out_of_range("cannot extend a truncated series");
  return LaurentSeries(variable_, leading_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order)));
}

std::string LaurentSeries::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const auto& c = coeffs_[j];
    if (c == 0) continue;
    const auto e = leading_ - static_cast<std::int64_t>(j);
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = negative ? Rational(-c) : c;
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += variable_;
    if (e != 1) out += '^' + std::to_string(e);
  }
  if (out.empty()) out = "0";
  out += " + O(" + variable_ + "^" + std::to_string(lowest_exponent() - 1) + ")";
  return out;
}

namespace {

std::map<std::int64_t, Rational> univariate(const MultivariatePoly& p, std::size_t var) {
  std::map<std::int64_t, Rational> out;
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (i != var && t.exps[i] != 0)
        throw std::invalid_argument("expand_at_infinity: input depends on " + p.vars().name(i));
    out[t.exps[var]] += Rational(t.coeff);
  }
  return out;
}

LaurentSeries expand(const MultivariateRational& f, std::size_t var, bool by_order, std::size_t order,
                     std::int64_t lowest) {
  if (var >= f.vars().size()) throw std::out_of_range("variable index out of range");
  auto num = univariate(f.numerator(), var);
  auto den = univariate(f.denominator(), var);
  if (den.empty()) throw std::domain_error("expand_at_infinity: zero denominator");
  const auto [den_top, den_lead] = *den.rbegin();
  const std::string& name = f.vars().name(var);
  if (num.empty()) {
    const std::size_t n = by_order ? order : 1;
    return LaurentSeries(name, by_order ? 0 : lowest, std::vector<Rational>(n, Rational(0)));
  }
  const std::int64_t leading = num.rbegin()->first - den_top;
  const std::size_t count = by_order ? order : (lowest > leading ? 0 : static_cast<std::size_t>(leading - lowest + 1));
  std::vector<Rational> coeffs;
  coeffs.reserve(count);
  // long division in descending powers: the remainder's top sits at den_top + e
  for (std::size_t j = 0; j < count; ++j) {
    const std::int64_t e = leading - static_cast<std::int64_t>(j);
    auto it = num.find(den_top + e);
    Rational c = (it == num.end()) ? Rational(0) : it->second / den_lead;
    coeffs.push_back(c);
    if (c == 0) continue;
    for (const auto& [de, dc] : den) {
      auto& slot = num[de + e];
      slot -= c * dc;
      if (slot == 0) num.erase(de + e);
    }
  }
  return LaurentSeries(name, leading, std::move(coeffs));
}

}  // namespace

LaurentSeries expand_at_infinity(const MultivariateRational& f, std::size_t var, std::size_t order) {
  return expand(f, var, true, order, 0);
}

LaurentSeries expand_at_infinity_to(const MultivariateRational& f, std::size_t var, std::int64_t lowest) {
  return expand(f, var, false, 0, lowest);
}

}  // namespace krv
