#include <krv/fermionic.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <map>
#include <stdexcept>

namespace krv {

std::string to_string(Grading g) { return g == Grading::paper ? "paper" : "cocharge"; }

std::string to_string(VacancyScope s) { return s == VacancyScope::all_indices ? "all" : "occupied"; }

Grading parse_grading(std::string_view text) {
  if (text == "paper") return Grading::paper;
  if (text == "cocharge") return Grading::cocharge;
  throw std::invalid_argument("unknown grading '" + std::string(text) + "' (expected paper|cocharge)");
}

VacancyScope parse_vacancy_scope(std::string_view text) {
  if (text == "all" || text == "all_indices") return VacancyScope::all_indices;
  if (text == "occupied" || text == "occupied_only") return VacancyScope::occupied_only;
  throw std::invalid_argument("unknown vacancy scope '" + std::string(text) + "' (expected all|occupied)");
}

// ---------------------------------------------------------------------------
// KrMultiplicities

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("malformed multiplicity entry '" + std::string(context) + "'");
  return v;
}

}  // namespace

KrMultiplicities KrMultiplicities::parse(std::string_view text, int rank) {
  KrMultiplicities n(rank);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(';', pos);
    if (next == std::string_view::npos) next = text.size();
    auto entry = trim(text.substr(pos, next - pos));
    pos = next + 1;
    if (entry.empty()) continue;
    auto colon = entry.find(':');
    auto eq = entry.find('=');
    if (colon == std::string_view::npos || eq == std::string_view::npos || eq < colon)
      throw std::invalid_argument("multiplicity entry '" + std::string(entry) + "' is not of the form a:j=count");
    const int a = parse_int(entry.substr(0, colon), entry);
    const int j = parse_int(entry.substr(colon + 1, eq - colon - 1), entry);
    const int c = parse_int(entry.substr(eq + 1), entry);
    if (a < 1 || a > rank) throw std::invalid_argument("node " + std::to_string(a) + " out of range in '" + std::string(entry) + "'");
    if (j < 1) throw std::invalid_argument("length must be >= 1 in '" + std::string(entry) + "'");
    if (c < 0) throw std::invalid_argument("count must be >= 0 in '" + std::string(entry) + "'");
    n.add(a - 1, j, c);
  }
  return n;
}

int KrMultiplicities::at(int a, int j) const {
  const auto& row = counts_.at(static_cast<std::size_t>(a));
  if (j < 1 || j > static_cast<int>(row.size())) return 0;
  return row[static_cast<std::size_t>(j - 1)];
}

void KrMultiplicities::set(int a, int j, int count) {
  if (j < 1) throw std::invalid_argument("string length must be >= 1");
  if (count < 0) throw std::invalid_argument("multiplicity must be >= 0");
  auto& row = counts_.at(static_cast<std::size_t>(a));
  if (static_cast<int>(row.size()) < j) row.resize(static_cast<std::size_t>(j), 0);
  row[static_cast<std::size_t>(j - 1)] = count;
  while (!row.empty() && row.back() == 0) row.pop_back();
}

bool KrMultiplicities::empty() const {
  return std::all_of(counts_.begin(), counts_.end(), [](const auto& r) { return r.empty(); });
}

int KrMultiplicities::max_length() const {
  int best = 0;
  for (const auto& r : counts_) best = std::max(best, static_cast<int>(r.size()));
  return best;
}

int KrMultiplicities::max_length(int a) const { return static_cast<int>(counts_.at(static_cast<std::size_t>(a)).size()); }

long KrMultiplicities::load() const {
  long total = 0;
  for (const auto& r : counts_)
    for (std::size_t j = 0; j < r.size(); ++j) total += static_cast<long>(j + 1) * r[j];
  return total;
}

Weight KrMultiplicities::top_weight() const {
  Weight w = Weight::zero(rank());
  for (int a = 0; a < rank(); ++a) {
    const auto& r = counts_[static_cast<std::size_t>(a)];
    for (std::size_t j = 0; j < r.size(); ++j) w[a] += static_cast<int>(j + 1) * r[j];
  }
  return w;
}

std::vector<std::tuple<int, int, int>> KrMultiplicities::entries() const {
  std::vector<std::tuple<int, int, int>> out;
  for (int a = 0; a < rank(); ++a) {
    const auto& r = counts_[static_cast<std::size_t>(a)];
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[j]) out.emplace_back(a, static_cast<int>(j + 1), r[j]);
  }
  return out;
}

std::string KrMultiplicities::to_string() const {
  std::string out;
  for (auto [a, j, c] : entries()) {
    if (!out.empty()) out += ';';
    out += std::to_string(a + 1) + ':' + std::to_string(j) + '=' + std::to_string(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// ModeConfig

int ModeConfig::count(int a, int i) const {
  const auto& r = counts_.at(static_cast<std::size_t>(a));
  if (i < 1 || i > static_cast<int>(r.size())) return 0;
  return r[static_cast<std::size_t>(i - 1)];
}

int ModeConfig::total(int a) const {
  const auto& r = counts_.at(static_cast<std::size_t>(a));
  int t = 0;
  for (std::size_t i = 0; i < r.size(); ++i) t += static_cast<int>(i + 1) * r[i];
  return t;
}

int ModeConfig::max_part() const {
  int best = 0;
  for (const auto& r : counts_)
    for (std::size_t i = r.size(); i > 0; --i)
      if (r[i - 1]) {
        best = std::max(best, static_cast<int>(i));
        break;
      }
  return best;
}

std::string ModeConfig::to_string() const {
  std::string out;
  for (std::size_t a = 0; a < counts_.size(); ++a)
    for (std::size_t i = 0; i < counts_[a].size(); ++i)
      if (counts_[a][i]) {
        if (!out.empty()) out += ';';
        out += std::to_string(a + 1) + ':' + std::to_string(i + 1) + '=' + std::to_string(counts_[a][i]);
      }
  return out;
}

std::string HalfInteger::to_string() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

// ---------------------------------------------------------------------------
// Weight condition, vacancies, energies

std::optional<ModeTotals> solve_weight_condition(const CartanData& cartan, const Weight& lambda,
                                                 const KrMultiplicities& n) {
  const int r = cartan.rank();
  if (lambda.rank() != r || n.rank() != r) throw std::invalid_argument("rank mismatch in fermionic input");
  const Weight rhs = n.top_weight() - lambda;
  ModeTotals totals;
  totals.m.resize(static_cast<std::size_t>(r));
  const long det = cartan.determinant();
  for (int a = 0; a < r; ++a) {
    long s = 0;
    for (int b = 0; b < r; ++b) s += cartan.adjugate(a, b) * rhs[b];
    if (s % det != 0) return std::nullopt;
    const long v = s / det;
    if (v < 0) return std::nullopt;
    totals.m[static_cast<std::size_t>(a)] = static_cast<int>(v);
  }
  return totals;
}

long vacancy(const CartanData& cartan, const KrMultiplicities& n, const ModeConfig& config, int a, int i) {
  long p = 0;
  for (int j = 1; j <= n.max_length(a); ++j) p += static_cast<long>(std::min(i, j)) * n.at(a, j);
  for (int b = 0; b < config.rank(); ++b) {
    const auto& row = config.row(b);
    for (std::size_t jj = 0; jj < row.size(); ++jj)
      if (row[jj]) p -= static_cast<long>(b_entry(cartan, a, b, i, static_cast<int>(jj + 1))) * row[jj];
  }
  return p;
}

HalfInteger energy(const CartanData& cartan, const KrMultiplicities& n, const ModeConfig& config, Grading grading) {
  std::int64_t twice = 0;
  for (int a = 0; a < config.rank(); ++a) {
    const auto& row = config.row(a);
    for (std::size_t ii = 0; ii < row.size(); ++ii) {
      if (!row[ii]) continue;
      const int i = static_cast<int>(ii + 1);
      if (grading == Grading::paper) {
        twice += static_cast<std::int64_t>(row[ii]) * vacancy(cartan, n, config, a, i);
      } else {
        for (int b = 0; b < config.rank(); ++b) {
          const auto& col = config.row(b);
          for (std::size_t jj = 0; jj < col.size(); ++jj)
            if (col[jj])
              twice += static_cast<std::int64_t>(b_entry(cartan, a, b, i, static_cast<int>(jj + 1))) * row[ii] * col[jj];
        }
      }
    }
  }
  return HalfInteger{twice};
}

int tail_check_index(const CartanData& cartan, const KrMultiplicities& n, const ModeConfig& config) {
  int max_c = 2;  // diagonal entries
  for (int a = 0; a < cartan.rank(); ++a)
    for (int b = 0; b < cartan.rank(); ++b) max_c = std::max(max_c, std::abs(cartan(a, b)));
  return config.max_part() * max_c + n.max_length();
}

bool passes_restriction(const CartanData& cartan, const KrMultiplicities& n, const ModeConfig& config,
                        VacancyScope scope) {
  if (scope == VacancyScope::occupied_only) {
    for (int a = 0; a < config.rank(); ++a) {
      const auto& row = config.row(a);
      for (std::size_t ii = 0; ii < row.size(); ++ii)
        if (row[ii] && vacancy(cartan, n, config, a, static_cast<int>(ii + 1)) < 0) return false;
    }
    return true;
  }
  const int limit = tail_check_index(cartan, n, config);
  for (int a = 0; a < config.rank(); ++a)
    for (int i = 1; i <= limit; ++i)
      if (vacancy(cartan, n, config, a, i) < 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void partitions(int remaining, int largest, std::vector<int>& counts, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(counts);
    return;
  }
  if (largest == 0) return;
  const auto slot = static_cast<std::size_t>(largest - 1);
  for (int c = remaining / largest; c >= 0; --c) {
    counts[slot] = c;
    partitions(remaining - c * largest, largest - 1, counts, out);
  }
  counts[slot] = 0;
}

std::vector<std::vector<int>> partitions_of(int total, std::optional<int> max_length) {
  const int largest = max_length ? std::min(total, *max_length) : total;
  std::vector<int> counts(static_cast<std::size_t>(std::max(largest, 0)), 0);
  std::vector<std::vector<int>> out;
  if (total == 0) {
    out.emplace_back();
    return out;
  }
  partitions(total, largest, counts, out);
  for (auto& p : out)
    while (!p.empty() && p.back() == 0) p.pop_back();
  return out;
}

}  // namespace

void for_each_mode_config(const ModeTotals& totals, std::optional<int> max_length,
                          const std::function<void(const ModeConfig&)>& visit) {
  const auto r = totals.m.size();
  std::vector<std::vector<std::vector<int>>> per_colour(r);
  for (std::size_t a = 0; a < r; ++a) {
    per_colour[a] = partitions_of(totals.m[a], max_length);
    if (per_colour[a].empty()) return;
  }
  std::vector<std::size_t> idx(r, 0);
  std::vector<std::vector<int>> counts(r);
  while (true) {
    for (std::size_t a = 0; a < r; ++a) counts[a] = per_colour[a][idx[a]];
    visit(ModeConfig(counts));
    // odometer with the last colour varying fastest
    std::size_t a = r;
    while (a > 0) {
      --a;
      if (++idx[a] < per_colour[a].size()) break;
      idx[a] = 0;
      if (a == 0) return;
    }
    if (r == 0) return;
  }
}

std::vector<ModeConfig> enumerate_modes(const ModeTotals& totals, std::optional<int> max_length) {
  std::vector<ModeConfig> out;
  for_each_mode_config(totals, max_length, [&](const ModeConfig& c) { out.push_back(c); });
  return out;
}

// ---------------------------------------------------------------------------
// Sums

namespace {

class SumEngine {
 public:
  SumEngine(const FermionicInput& input, bool graded) : in_(input), graded_(graded) {}

  void visit(const ModeConfig& config, FermionicSums& out) {
    ++out.stats.total;
    const bool kept = passes_restriction(in_.cartan, in_.n, config, in_.vacancy_scope);
    if (kept) ++out.stats.restricted;

    Int at_one = 1;
    GradedPoly product = GradedPoly::one();
    std::int64_t twice_paper = 0;
    for (int a = 0; a < config.rank(); ++a) {
      const auto& row = config.row(a);
      for (std::size_t ii = 0; ii < row.size(); ++ii) {
        if (!row[ii]) continue;
        const long p = vacancy(in_.cartan, in_.n, config, a, static_cast<int>(ii + 1));
        twice_paper += static_cast<std::int64_t>(row[ii]) * p;
        at_one *= binom_ext(row[ii], p);
        if (graded_ && !product.is_zero()) product = product * cached_qbinom(row[ii], p);
      }
    }
    if (!kept && at_one != 0) ++out.stats.nonzero_dropped;
    out.n_at_one += at_one;
    if (kept) out.m_at_one += at_one;
    if (!graded_ || product.is_zero()) return;
    const auto twice_cocharge = energy(in_.cartan, in_.n, config, Grading::cocharge).twice;
    auto paper_term = product.shifted_half(twice_paper);
    auto cocharge_term = product.shifted_half(twice_cocharge);
    out.n_paper += paper_term;
    out.n_cocharge += cocharge_term;
    if (kept) {
      out.m_paper += paper_term;
      out.m_cocharge += cocharge_term;
    }
  }

 private:
  const GradedPoly& cached_qbinom(int m, long p) {
    auto key = std::make_pair(m, p);
    auto it = qbinoms_.find(key);
    if (it == qbinoms_.end()) it = qbinoms_.emplace(key, qbinom(m, p)).first;
    return it->second;
  }

  const FermionicInput& in_;
  bool graded_;
  std::map<std::pair<int, long>, GradedPoly> qbinoms_;
};

}  // namespace

FermionicSums fermionic_sums(const FermionicInput& input, bool graded) {
  if (input.max_string_length && *input.max_string_length < 1)
    throw std::invalid_argument("max string length must be >= 1");
  FermionicSums out;
  out.totals = solve_weight_condition(input.cartan, input.lambda, input.n);
  if (!out.totals) return out;
  SumEngine engine(input, graded);
  for_each_mode_config(*out.totals, input.max_string_length,
                       [&](const ModeConfig& c) { engine.visit(c, out); });
  out.stats.cancelled = out.stats.total - out.stats.restricted;
  return out;
}

GradedPoly m_sum(const FermionicInput& input) { return fermionic_sums(input).m(input.grading); }

GradedPoly n_sum(const FermionicInput& input) { return fermionic_sums(input).n(input.grading); }

IdentityReport verify_mn(const FermionicInput& input) {
  const auto start = std::chrono::steady_clock::now();
  auto sums = fermionic_sums(input);
  IdentityReport report;
  report.m = sums.m(input.grading);
  report.n = sums.n(input.grading);
  report.m_at_one = sums.m_at_one;
  report.n_at_one = sums.n_at_one;
  report.equal_graded = report.m == report.n;
  report.equal_at_1 = report.m_at_one == report.n_at_one;
  report.counts = sums.stats;
  report.totals = sums.totals;
  report.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace krv
