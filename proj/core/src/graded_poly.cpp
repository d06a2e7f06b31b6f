#include <krv/graded_poly.hpp>

#include <stdexcept>

namespace krv {

GradedPoly GradedPoly::half_term(std::int64_t half_exponent, const Int& c) {
  GradedPoly p;
  p.add_term(half_exponent, c);
  return p;
}

void GradedPoly::add_term(std::int64_t half_exponent, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(half_exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int GradedPoly::coefficient_half(std::int64_t half_exponent) const {
  auto it = terms_.find(half_exponent);
  return it == terms_.end() ? Int(0) : it->second;
}

Int GradedPoly::value_at_one() const {
  Int total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

bool GradedPoly::nonnegative_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

bool GradedPoly::integral_exponents() const {
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0) return false;
  return true;
}

std::int64_t GradedPoly::min_half_exponent() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

std::int64_t GradedPoly::max_half_exponent() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

GradedPoly GradedPoly::shifted_half(std::int64_t half_shift) const {
  GradedPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + half_shift, c);
  return out;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  GradedPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

GradedPoly operator-(const GradedPoly& a) {
  GradedPoly out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::string GradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Int mag = negative ? Int(-c) : c;
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += 'q';
    if (e % 2 != 0) {
      out += "^(" + std::to_string(e) + "/2)";
    } else if (e != 2) {
      out += '^' + std::to_string(e / 2);
    }
  }
  return out;
}

Int binom_ext(int m, std::int64_t p) {
  if (m < 0) throw std::invalid_argument("binom_ext needs m >= 0");
  Int num = 1, den = 1;
  for (int i = 1; i <= m; ++i) {
    num *= Int(p + i);
    den *= i;
  }
  return num / den;
}

namespace {

// Gaussian binomial [m+p, m]_q for p >= 0 as a dense coefficient vector,
// built by alternately multiplying by (1 - q^{p+i}) and dividing by (1 - q^i).
std::vector<Int> gaussian(int m, std::int64_t p) {
  std::vector<Int> f{1};
  for (int i = 1; i <= m; ++i) {
    const auto up = static_cast<std::size_t>(p + i);
    std::vector<Int> g(f.size() + up, Int(0));
    for (std::size_t k = 0; k < f.size(); ++k) {
      g[k] += f[k];
      g[k + up] -= f[k];
    }
    // exact division by (1 - q^i): h_k = g_k + h_{k-i}
    const auto down = static_cast<std::size_t>(i);
    std::vector<Int> h(g.size() - down, Int(0));
    for (std::size_t k = 0; k < h.size(); ++k) h[k] = g[k] + (k >= down ? h[k - down] : Int(0));
    f = std::move(h);
  }
  return f;
}

}  // namespace

GradedPoly qbinom(int m, std::int64_t p) {
  if (m < 0) throw std::invalid_argument("qbinom needs m >= 0");
  if (m == 0) return GradedPoly::one();
  if (p >= 0) {
    GradedPoly out;
    auto coeffs = gaussian(m, p);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      out += GradedPoly::q_power(static_cast<std::int64_t>(k), coeffs[k]);
    return out;
  }
  if (p >= -m) return GradedPoly{};  // a factor (1 - q^0) in the numerator
  // Every numerator factor has a negative exponent: 1 - q^{-a} = -q^{-a}(1 - q^a)
  // with a = -p-i running over -p-m .. -p-1, which is [m + p', m]_q for p' = -p-m-1.
  const std::int64_t p_prime = -p - m - 1;
  std::int64_t shift = 0;
  for (int i = 1; i <= m; ++i) shift -= (-p - i);
  GradedPoly base = qbinom(m, p_prime).shifted_half(2 * shift);
  return (m % 2 == 0) ? base : -base;
}

}  // namespace krv
