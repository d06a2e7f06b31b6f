#include <krv/charoracle.hpp>

#include <algorithm>
#include <deque>
#include <set>

namespace krv {

Weight simple_reflection(const CartanData& cartan, const Weight& mu, int i) {
  Weight out = mu;
  const int c = mu[i];
  if (c == 0) return out;
  for (int a = 0; a < cartan.rank(); ++a) out[a] -= c * cartan(a, i);
  return out;
}

Weight dominant_representative(const CartanData& cartan, const Weight& mu) {
  Weight w = mu;
  while (true) {
    int i = 0;
    while (i < w.rank() && w[i] >= 0) ++i;
    if (i == w.rank()) return w;
    w = simple_reflection(cartan, w, i);
  }
}

std::vector<Weight> weyl_orbit(const CartanData& cartan, const Weight& mu) {
  std::set<Weight> seen{mu};
  std::deque<Weight> queue{mu};
  while (!queue.empty()) {
    const Weight w = queue.front();
    queue.pop_front();
    for (int i = 0; i < cartan.rank(); ++i) {
      if (w[i] == 0) continue;
      auto s = simple_reflection(cartan, w, i);
      if (seen.insert(s).second) queue.push_back(std::move(s));
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

void check_rank(const CartanData& cartan, const OracleLimits& limits) {
  if (cartan.rank() > limits.max_rank)
    throw CostGuardExceeded("character oracle limited to rank " + std::to_string(limits.max_rank), 0);
}

void check_support(std::size_t size, const OracleLimits& limits, const char* what) {
  if (size > limits.max_support) throw CostGuardExceeded(std::string(what) + " exceeds the support limit", size);
}

/// det * (height of lambda - mu in simple roots); larger means deeper below lambda.
Int scaled_depth(const CartanData& cartan, const Weight& lambda, const Weight& mu) {
  Int h = 0;
  for (int j = 0; j < cartan.rank(); ++j)
    for (int i = 0; i < cartan.rank(); ++i) h += Int(cartan.adjugate(j, i)) * (lambda[i] - mu[i]);
  return h;
}

Int scaled_height(const CartanData& cartan, const Weight& mu) {
  Int h = 0;
  for (int j = 0; j < cartan.rank(); ++j)
    for (int i = 0; i < cartan.rank(); ++i) h += Int(cartan.adjugate(j, i)) * mu[i];
  return h;
}

Weight root_weight(const Root& r) { return Weight(r.omega); }

}  // namespace

CharacterMap dominant_character(const CartanData& cartan, const Weight& lambda, const OracleLimits& limits) {
  check_rank(cartan, limits);
  if (lambda.rank() != cartan.rank()) throw std::invalid_argument("weight rank does not match the algebra");
  if (!lambda.is_dominant()) throw std::invalid_argument("highest weight must be dominant");

  std::vector<Weight> roots;
  for (const auto& r : cartan.positive_roots()) roots.push_back(root_weight(r));

  // dominant weights below lambda, reached by subtracting positive roots
  std::set<Weight> dominant{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    const Weight w = queue.front();
    queue.pop_front();
    for (const auto& a : roots) {
      Weight next = w - a;
      if (!next.is_dominant()) continue;
      if (dominant.insert(next).second) {
        check_support(dominant.size(), limits, "dominant weight set");
        queue.push_back(std::move(next));
      }
    }
  }

  std::vector<Weight> order(dominant.begin(), dominant.end());
  std::sort(order.begin(), order.end(), [&](const Weight& x, const Weight& y) {
    return scaled_depth(cartan, lambda, x) < scaled_depth(cartan, lambda, y);
  });

  Weight rho = Weight::zero(cartan.rank());
  for (int i = 0; i < cartan.rank(); ++i) rho[i] = 1;
  const Int top = cartan.scaled_form(lambda + rho, lambda + rho);

  CharacterMap mult;
  mult[lambda] = 1;
  auto lookup = [&](const Weight& w) -> Int {
    auto it = mult.find(dominant_representative(cartan, w));
    return it == mult.end() ? Int(0) : it->second;
  };
  for (const auto& mu : order) {
    if (mu == lambda) continue;
    Int numerator = 0;
    for (const auto& a : roots) {
      Weight shifted = mu + a;
      while (true) {
        const Int m = lookup(shifted);
        if (m == 0) break;
        numerator += m * cartan.scaled_form(shifted, a);
        shifted += a;
      }
    }
    numerator *= 2;
    const Int denominator = top - cartan.scaled_form(mu + rho, mu + rho);
    if (denominator <= 0 || numerator % denominator != 0)
      throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
    const Int m = numerator / denominator;
    if (m != 0) mult[mu] = m;
  }
  return mult;
}

CharacterMap irr_character(const CartanData& cartan, const Weight& lambda, const OracleLimits& limits) {
  const auto dom = dominant_character(cartan, lambda, limits);
  CharacterMap chi;
  for (const auto& [mu, m] : dom) {
    for (auto& w : weyl_orbit(cartan, mu)) chi.emplace(std::move(w), m);
    check_support(chi.size(), limits, "character");
  }
  return chi;
}

CharacterMap character_product(const CharacterMap& a, const CharacterMap& b, const OracleLimits& limits) {
  CharacterMap out;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) {
      auto& slot = out[wa + wb];
      slot += ma * mb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  check_support(out.size(), limits, "product character");
  return out;
}

Int character_mass(const CharacterMap& chi) {
  Int total = 0;
  for (const auto& [w, m] : chi) total += m;
  return total;
}

bool is_weyl_symmetric(const CartanData& cartan, const CharacterMap& chi) {
  for (const auto& [w, m] : chi)
    for (int i = 0; i < cartan.rank(); ++i) {
      auto it = chi.find(simple_reflection(cartan, w, i));
      if (it == chi.end() || it->second != m) return false;
    }
  return true;
}

std::map<Weight, Int> decompose_character(const CartanData& cartan, const CharacterMap& chi, const OracleLimits& limits) {
  CharacterMap rest;
  for (const auto& [w, m] : chi)
    if (w.is_dominant() && m != 0) rest.emplace(w, m);
  std::map<Weight, Int> out;
  std::map<Weight, CharacterMap> cache;
  while (!rest.empty()) {
    auto best = rest.begin();
    Int best_height = scaled_height(cartan, best->first);
    for (auto it = std::next(rest.begin()); it != rest.end(); ++it) {
      Int h = scaled_height(cartan, it->first);
      if (h > best_height) {
        best = it;
        best_height = std::move(h);
      }
    }
    const Weight lambda = best->first;
    const Int c = best->second;
    out[lambda] += c;
    auto cached = cache.find(lambda);
    if (cached == cache.end()) cached = cache.emplace(lambda, dominant_character(cartan, lambda, limits)).first;
    for (const auto& [mu, m] : cached->second) {
      auto& slot = rest[mu];
      slot -= c * m;
      if (slot == 0) rest.erase(mu);
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::map<Weight, Int> tensor_decompose(const CartanData& cartan, const std::vector<Weight>& factors,
                                       const OracleLimits& limits) {
  check_rank(cartan, limits);
  for (const auto& w : factors)
    if (w.rank() != cartan.rank() || !w.is_dominant()) throw std::invalid_argument("tensor factors must be dominant weights");
  CharacterMap chi{{Weight::zero(cartan.rank()), Int(1)}};
  std::map<Weight, CharacterMap> cache;
  for (const auto& w : factors) {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, irr_character(cartan, w, limits)).first;
    chi = character_product(chi, it->second, limits);
  }
  return decompose_character(cartan, chi, limits);
}

std::vector<Weight> kr_factors_typeA(const CartanData& cartan, const KrMultiplicities& n) {
  if (cartan.family() != Family::A) throw std::invalid_argument("KR restriction oracle is limited to type A");
  if (n.rank() != cartan.rank()) throw std::invalid_argument("rank mismatch in multiplicities");
  std::vector<Weight> factors;
  for (auto [a, j, count] : n.entries())
    for (int c = 0; c < count; ++c) {
      Weight w = Weight::zero(cartan.rank());
      w[a] = j;
      factors.push_back(std::move(w));
    }
  return factors;
}

std::map<Weight, Int> kr_tensor_decomposition_typeA(const CartanData& cartan, const KrMultiplicities& n,
                                                    const OracleLimits& limits) {
  return tensor_decompose(cartan, kr_factors_typeA(cartan, n), limits);
}

Int kr_tensor_multiplicity_typeA(const CartanData& cartan, const KrMultiplicities& n, const Weight& lambda,
                                 const OracleLimits& limits) {
  const auto d = kr_tensor_decomposition_typeA(cartan, n, limits);
  auto it = d.find(lambda);
  return it == d.end() ? Int(0) : it->second;
}

}  // namespace krv
