#include <krv/mpoly.hpp>

#include <algorithm>
#include <cstring>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace krv {

VarSet::VarSet(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  if (names_->size() > kMaxVars)
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables are supported");
}

std::optional<std::size_t> VarSet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

namespace {

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::uint64_t words[4];
    std::memcpy(words, e.data(), sizeof(words));
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

static_assert(sizeof(Exponents) == 4 * sizeof(std::uint64_t));

std::int16_t checked(int v) {
  if (v > std::numeric_limits<std::int16_t>::max() || v < std::numeric_limits<std::int16_t>::min())
    throw std::overflow_error("monomial exponent overflow");
  return static_cast<std::int16_t>(v);
}

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents out{};
  for (std::size_t i = 0; i < kMaxVars; ++i) out[i] = checked(a[i] + b[i]);
  return out;
}

Exponents sub(const Exponents& a, const Exponents& b) {
  Exponents out{};
  for (std::size_t i = 0; i < kMaxVars; ++i) out[i] = checked(a[i] - b[i]);
  return out;
}

bool dominates(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a[i] < b[i]) return false;
  return true;
}

using Remainder = std::map<Exponents, Int, std::greater<>>;

void accumulate(Remainder& r, const Exponents& e, const Int& c) {
  auto [it, inserted] = r.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) r.erase(it);
  }
}

}  // namespace

MultivariatePoly MultivariatePoly::constant(VarSet vars, const Int& c) {
  MultivariatePoly p(std::move(vars));
  if (c != 0) p.terms_.push_back({Exponents{}, c});
  return p;
}

MultivariatePoly MultivariatePoly::variable(VarSet vars, std::size_t index, int power) {
  if (index >= vars.size()) throw std::out_of_range("variable index out of range");
  Exponents e{};
  e[index] = checked(power);
  return monomial(std::move(vars), e, 1);
}

MultivariatePoly MultivariatePoly::monomial(VarSet vars, const Exponents& exps, const Int& c) {
  MultivariatePoly p(std::move(vars));
  if (c != 0) p.terms_.push_back({exps, c});
  return p;
}

MultivariatePoly MultivariatePoly::from_terms(VarSet vars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exps > b.exps; });
  MultivariatePoly p(std::move(vars));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exps == t.exps) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

void MultivariatePoly::check_same_vars(const MultivariatePoly& o) const {
  if (!(vars_ == o.vars_)) throw std::invalid_argument("polynomials over different variable sets");
}

bool MultivariatePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().exps == Exponents{});
}

bool MultivariatePoly::is_polynomial() const {
  for (const auto& t : terms_)
    for (auto e : t.exps)
      if (e < 0) return false;
  return true;
}

Exponents MultivariatePoly::min_exponents() const {
  if (terms_.empty()) return Exponents{};
  Exponents m = terms_.front().exps;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kMaxVars; ++i) m[i] = std::min(m[i], t.exps[i]);
  return m;
}

int MultivariatePoly::max_degree(std::size_t var) const {
  if (terms_.empty()) throw std::logic_error("degree of the zero polynomial");
  int d = std::numeric_limits<int>::min();
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.exps[var]));
  return d;
}

int MultivariatePoly::min_degree(std::size_t var) const {
  if (terms_.empty()) throw std::logic_error("degree of the zero polynomial");
  int d = std::numeric_limits<int>::max();
  for (const auto& t : terms_) d = std::min(d, static_cast<int>(t.exps[var]));
  return d;
}

int MultivariatePoly::total_degree() const {
  if (terms_.empty()) throw std::logic_error("degree of the zero polynomial");
  int d = std::numeric_limits<int>::min();
  for (const auto& t : terms_) {
    int s = 0;
    for (auto e : t.exps) s += e;
    d = std::max(d, s);
  }
  return d;
}

MultivariatePoly MultivariatePoly::substitute(std::size_t var, const Int& value) const {
  if (var >= vars_.size()) throw std::out_of_range("variable index out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const int e = t.exps[var];
    Int factor = 1;
    if (e < 0) {
      if (value != 1 && value != -1) throw std::domain_error("negative power of a non-unit value");
      factor = ((-e) % 2 == 1) ? value : Int(1);
    } else {
      factor = boost::multiprecision::pow(value, static_cast<unsigned>(e));
    }
    if (factor == 0) continue;
    Term nt{t.exps, t.coeff * factor};
    nt.exps[var] = 0;
    out.push_back(std::move(nt));
  }
  return from_terms(vars_, std::move(out));
}

Int MultivariatePoly::evaluate(std::span<const Int> values) const {
  if (values.size() != vars_.size()) throw std::invalid_argument("evaluate: wrong number of values");
  Int total = 0;
  for (const auto& t : terms_) {
    Int v = t.coeff;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const int e = t.exps[i];
      if (e >= 0) {
        v *= boost::multiprecision::pow(values[i], static_cast<unsigned>(e));
      } else {
        if (values[i] != 1 && values[i] != -1) throw std::domain_error("negative power of a non-unit value");
        if ((-e) % 2 == 1) v *= values[i];
      }
    }
    total += v;
  }
  return total;
}

MultivariatePoly MultivariatePoly::pow(unsigned n) const {
  MultivariatePoly result = constant(vars_, 1);
  MultivariatePoly base = *this;
  while (n) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n) base = base * base;
  }
  return result;
}

MultivariatePoly MultivariatePoly::times_monomial(const Exponents& exps) const {
  MultivariatePoly out(vars_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({add(t.exps, exps), t.coeff});
  return out;  // shifting preserves lexicographic order
}

MultivariatePoly& MultivariatePoly::operator+=(const MultivariatePoly& o) {
  check_same_vars(o);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exps > b->exps)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exps > a->exps) {
      merged.push_back(*b++);
    } else {
      Int c = a->coeff + b->coeff;
      if (c != 0) merged.push_back({a->exps, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

MultivariatePoly& MultivariatePoly::operator-=(const MultivariatePoly& o) { return *this += -o; }

MultivariatePoly operator-(MultivariatePoly a) {
  for (auto& t : a.terms_) t.coeff = -t.coeff;
  return a;
}

MultivariatePoly operator*(MultivariatePoly a, const Int& c) {
  if (c == 0) return MultivariatePoly(a.vars_);
  for (auto& t : a.terms_) t.coeff *= c;
  return a;
}

MultivariatePoly operator*(const MultivariatePoly& a, const MultivariatePoly& b) {
  a.check_same_vars(b);
  if (a.terms_.empty() || b.terms_.empty()) return MultivariatePoly(a.vars_);
  if (a.terms_.size() == 1) {
    auto out = b.times_monomial(a.terms_.front().exps);
    return out * a.terms_.front().coeff;
  }
  if (b.terms_.size() == 1) {
    auto out = a.times_monomial(b.terms_.front().exps);
    return out * b.terms_.front().coeff;
  }
  std::unordered_map<Exponents, Int, ExponentsHash> acc;
  acc.reserve(a.terms_.size() * 2 + b.terms_.size() * 2);
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      auto [it, inserted] = acc.try_emplace(add(ta.exps, tb.exps), Int(ta.coeff * tb.coeff));
      if (!inserted) it->second += ta.coeff * tb.coeff;
    }
  std::vector<MultivariatePoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) terms.push_back({e, std::move(c)});
  std::sort(terms.begin(), terms.end(),
            [](const MultivariatePoly::Term& x, const MultivariatePoly::Term& y) { return x.exps > y.exps; });
  MultivariatePoly out(a.vars_);
  out.terms_ = std::move(terms);
  return out;
}

std::string MultivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Int mag = negative ? Int(-t.coeff) : t.coeff;
    std::string mono;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_.name(i);
      if (t.exps[i] != 1) mono += '^' + std::to_string(t.exps[i]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + '*';
      out += mono;
    }
  }
  return out;
}

namespace {

// Divides polynomial a by polynomial b (no negative exponents, neither divisible
// by a variable). On failure either stops (witness == nullptr) or keeps going
// and collects the full remainder.
std::optional<std::vector<MultivariatePoly::Term>> divide_polynomials(
    const MultivariatePoly& a, const MultivariatePoly& b, std::vector<MultivariatePoly::Term>* witness) {
  Remainder rem;
  for (const auto& t : a.terms()) rem.emplace(t.exps, t.coeff);
  const auto& lead = b.terms().front();
  std::vector<MultivariatePoly::Term> quotient;
  bool ok = true;
  while (!rem.empty()) {
    auto it = rem.begin();
    const bool monomial_divides = dominates(it->first, lead.exps);
    const bool coeff_divides = monomial_divides && (it->second % lead.coeff == 0);
    if (!coeff_divides) {
      ok = false;
      if (!witness) return std::nullopt;
      witness->push_back({it->first, it->second});
      rem.erase(it);
      continue;
    }
    const Exponents qe = sub(it->first, lead.exps);
    const Int qc = it->second / lead.coeff;
    for (const auto& t : b.terms()) accumulate(rem, add(qe, t.exps), -qc * t.coeff);
    quotient.push_back({qe, qc});
  }
  if (!ok) return std::nullopt;
  return quotient;
}

}  // namespace

DivisionOutcome exact_divide(const MultivariatePoly& a, const MultivariatePoly& b) {
  if (!(a.vars() == b.vars())) throw std::invalid_argument("polynomials over different variable sets");
  if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  DivisionOutcome out;
  if (a.is_zero()) {
    out.quotient = MultivariatePoly(a.vars());
    return out;
  }
  const Exponents ma = a.min_exponents(), mb = b.min_exponents();
  Exponents neg_a{}, neg_b{};
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    neg_a[i] = static_cast<std::int16_t>(-ma[i]);
    neg_b[i] = static_cast<std::int16_t>(-mb[i]);
  }
  const auto an = a.times_monomial(neg_a), bn = b.times_monomial(neg_b);
  std::vector<MultivariatePoly::Term> witness;
  auto q = divide_polynomials(an, bn, &witness);
  if (q) {
    out.quotient = MultivariatePoly::from_terms(a.vars(), std::move(*q)).times_monomial(sub(ma, mb));
  } else {
    out.remainder = MultivariatePoly::from_terms(a.vars(), std::move(witness)).times_monomial(ma);
  }
  return out;
}

std::optional<MultivariatePoly> try_exact_divide(const MultivariatePoly& a, const MultivariatePoly& b) {
  if (!(a.vars() == b.vars())) throw std::invalid_argument("polynomials over different variable sets");
  if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (a.is_zero()) return MultivariatePoly(a.vars());
  const Exponents ma = a.min_exponents(), mb = b.min_exponents();
  Exponents neg_a{}, neg_b{};
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    neg_a[i] = static_cast<std::int16_t>(-ma[i]);
    neg_b[i] = static_cast<std::int16_t>(-mb[i]);
  }
  const auto an = a.times_monomial(neg_a), bn = b.times_monomial(neg_b);
  // cheap degree test before the division loop
  for (std::size_t v = 0; v < a.vars().size(); ++v)
    if (an.max_degree(v) < bn.max_degree(v)) return std::nullopt;
  auto q = divide_polynomials(an, bn, nullptr);
  if (!q) return std::nullopt;
  return MultivariatePoly::from_terms(a.vars(), std::move(*q)).times_monomial(sub(ma, mb));
}

}  // namespace krv
