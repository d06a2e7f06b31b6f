#include <krv/sweep.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace krv {

std::string SweepCase::key() const { return "n=" + n.to_string() + "|lambda=" + lambda.to_string(); }

std::vector<KrMultiplicities> multiplicities_up_to_load(int rank, int max_load) {
  if (max_load < 0) throw std::invalid_argument("load bound must be >= 0");
  std::vector<std::pair<int, int>> slots;  // (a, j)
  for (int a = 0; a < rank; ++a)
    for (int j = 1; j <= max_load; ++j) slots.emplace_back(a, j);
  std::vector<KrMultiplicities> out;
  KrMultiplicities current(rank);
  std::function<void(std::size_t, int)> walk = [&](std::size_t s, int left) {
    if (s == slots.size()) {
      out.push_back(current);
      return;
    }
    const auto [a, j] = slots[s];
    for (int c = 0; c * j <= left; ++c) {
      current.set(a, j, c);
      walk(s + 1, left - c * j);
    }
    current.set(a, j, 0);
  };
  walk(0, max_load);
  std::stable_sort(out.begin(), out.end(), [](const KrMultiplicities& x, const KrMultiplicities& y) {
    if (x.load() != y.load()) return x.load() < y.load();
    return x.to_string() < y.to_string();
  });
  return out;
}

std::vector<Weight> reachable_weights(const CartanData& cartan, const KrMultiplicities& n) {
  const int r = cartan.rank();
  const Weight top = n.top_weight();
  std::vector<int> bound(static_cast<std::size_t>(r), 0);
  for (int a = 0; a < r; ++a) {
    long s = 0;
    for (int b = 0; b < r; ++b) s += cartan.adjugate(a, b) * top[b];
    bound[static_cast<std::size_t>(a)] = static_cast<int>(s / cartan.determinant());
  }
  std::vector<Weight> out;
  std::vector<int> m(static_cast<std::size_t>(r), 0);
  while (true) {
    Weight lambda = top;
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) lambda[a] -= cartan(a, b) * m[static_cast<std::size_t>(b)];
    if (lambda.is_dominant()) out.push_back(std::move(lambda));
    int a = 0;
    for (; a < r; ++a) {
      auto& cell = m[static_cast<std::size_t>(a)];
      if (cell < bound[static_cast<std::size_t>(a)]) {
        ++cell;
        break;
      }
      cell = 0;
    }
    if (a == r) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SweepCase> exhaustive_cases(const CartanData& cartan, int max_load) {
  std::vector<SweepCase> out;
  for (const auto& n : multiplicities_up_to_load(cartan.rank(), max_load))
    for (auto& lambda : reachable_weights(cartan, n)) out.push_back({n, std::move(lambda)});
  return out;
}

namespace {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // rejection keeps the draw unbiased and independent of the standard library's distributions
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

}  // namespace

std::vector<SweepCase> sampled_cases(const CartanData& cartan, int max_load, std::size_t count, std::uint64_t seed) {
  auto pool = exhaustive_cases(cartan, max_load);
  if (count >= pool.size()) return pool;
  std::vector<std::size_t> idx(pool.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const auto j = i + static_cast<std::size_t>(uniform_below(rng, idx.size() - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(count);
  std::sort(idx.begin(), idx.end());
  std::vector<SweepCase> out;
  out.reserve(count);
  for (auto i : idx) out.push_back(std::move(pool[i]));
  return out;
}

bool CaseResult::graded_equal(Grading g) const {
  return g == Grading::paper ? paper.equal_graded : m_cocharge == n_cocharge;
}

CaseResult run_case(const CartanData& cartan, const SweepCase& c, const CaseOptions& options) {
  FermionicInput input{cartan, c.lambda, c.n, Grading::paper, options.vacancy_scope, std::nullopt};
  CaseResult result;
  result.input = c;
  auto sums = fermionic_sums(input, options.graded);
  auto& rep = result.paper;
  rep.m = sums.m_paper;
  rep.n = sums.n_paper;
  rep.m_at_one = sums.m_at_one;
  rep.n_at_one = sums.n_at_one;
  rep.equal_graded = rep.m == rep.n;
  rep.equal_at_1 = rep.m_at_one == rep.n_at_one;
  rep.counts = sums.stats;
  rep.totals = sums.totals;
  result.m_cocharge = std::move(sums.m_cocharge);
  result.n_cocharge = std::move(sums.n_cocharge);
  if (options.oracle && cartan.family() == Family::A)
    result.oracle = kr_tensor_multiplicity_typeA(cartan, c.n, c.lambda, options.limits);
  return result;
}

SumRule dimension_sum_rule(const CartanData& cartan, const KrMultiplicities& n) {
  if (cartan.family() != Family::A) throw std::invalid_argument("the dimension sum rule is checked in type A only");
  SumRule rule{0, 1};
  for (const auto& lambda : reachable_weights(cartan, n)) {
    FermionicInput input{cartan, lambda, n, Grading::paper, VacancyScope::all_indices, std::nullopt};
    rule.lhs += fermionic_sums(input, false).m_at_one * weyl_dim(cartan, lambda);
  }
  for (auto [a, j, count] : n.entries()) {
    Weight w = Weight::zero(cartan.rank());
    w[a] = j;
    const Int d = weyl_dim(cartan, w);
    for (int c = 0; c < count; ++c) rule.rhs *= d;
  }
  return rule;
}

}  // namespace krv
