#include <krv/liealg.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace krv {

bool Weight::is_dominant() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.coeffs.size() != coeffs.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t a = 0; a < coeffs.size(); ++a) coeffs[a] += o.coeffs[a];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.coeffs.size() != coeffs.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t a = 0; a < coeffs.size(); ++a) coeffs[a] -= o.coeffs[a];
  return *this;
}

std::string Weight::to_string() const {
  std::string out;
  for (std::size_t a = 0; a < coeffs.size(); ++a) {
    if (a) out += ',';
    out += std::to_string(coeffs[a]);
  }
  return out;
}

Weight Weight::parse(std::string_view text, int rank) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    auto field = text.substr(pos, next - pos);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) field.remove_prefix(1);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) field.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
      throw std::invalid_argument("malformed weight '" + std::string(text) + "'");
    values.push_back(v);
    pos = next + 1;
  }
  if (static_cast<int>(values.size()) != rank)
    throw std::invalid_argument("weight '" + std::string(text) + "' needs " + std::to_string(rank) +
                                " coefficients");
  return Weight(std::move(values));
}

int Root::height() const { return std::accumulate(simple.begin(), simple.end(), 0); }

namespace {

void link(IntMatrix& c, int a, int b) {
  c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = -1;
  c[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = -1;
}

IntMatrix identity2(int rank) {
  IntMatrix c(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
  for (int a = 0; a < rank; ++a) c[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = 2;
  return c;
}

void chain(IntMatrix& c, int from, int to) {
  for (int a = from; a < to; ++a) link(c, a, a + 1);
}

}  // namespace

IntMatrix cartan_matrix(Family family, int rank) {
  auto bad = [&] {
    return std::invalid_argument(std::string("no simple Lie algebra of type ") +
                                 static_cast<char>(family) + std::to_string(rank));
  };
  IntMatrix c;
  switch (family) {
    case Family::A:
      if (rank < 1) throw bad();
      c = identity2(rank);
      chain(c, 0, rank - 1);
      break;
    case Family::B:
      if (rank < 2) throw bad();
      c = identity2(rank);
      chain(c, 0, rank - 1);
      c[static_cast<std::size_t>(rank - 1)][static_cast<std::size_t>(rank - 2)] = -2;
      break;
    case Family::C:
      if (rank < 2) throw bad();
      c = identity2(rank);
      chain(c, 0, rank - 1);
      c[static_cast<std::size_t>(rank - 2)][static_cast<std::size_t>(rank - 1)] = -2;
      break;
    case Family::D:
      if (rank < 4) throw bad();
      c = identity2(rank);
      chain(c, 0, rank - 2);
      link(c, rank - 3, rank - 1);
      break;
    case Family::E:
      if (rank < 6 || rank > 8) throw bad();
      c = identity2(rank);
      link(c, 0, 2);
      chain(c, 2, rank - 1);
      link(c, 1, 3);
      break;
    case Family::F:
      if (rank != 4) throw bad();
      c = identity2(4);
      chain(c, 0, 3);
      c[2][1] = -2;
      break;
    case Family::G:
      if (rank != 2) throw bad();
      c = identity2(2);
      c[0][1] = -1;
      c[1][0] = -3;
      break;
    default:
      throw bad();
  }
  return c;
}

CartanData::CartanData(Family family, int rank) : family_(family), rank_(rank) {
  for (const auto& row : cartan_matrix(family, rank)) c_.insert(c_.end(), row.begin(), row.end());
  derive();
}

CartanData::CartanData(Family family, int rank, std::vector<int> entries)
    : family_(family), rank_(rank), c_(std::move(entries)) {
  derive();
}

CartanData CartanData::parse(std::string_view label) {
  if (label.size() < 2) throw std::invalid_argument("malformed algebra label '" + std::string(label) + "'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(label.front())));
  if (std::string_view("ABCDEFG").find(f) == std::string_view::npos)
    throw std::invalid_argument("unknown algebra family in '" + std::string(label) + "'");
  int rank = 0;
  auto digits = label.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw std::invalid_argument("malformed algebra rank in '" + std::string(label) + "'");
  return CartanData(static_cast<Family>(f), rank);
}

std::string CartanData::name() const { return static_cast<char>(family_) + std::to_string(rank_); }

IntMatrix CartanData::matrix() const {
  IntMatrix m(static_cast<std::size_t>(rank_));
  for (int a = 0; a < rank_; ++a)
    for (int b = 0; b < rank_; ++b) m[static_cast<std::size_t>(a)].push_back((*this)(a, b));
  return m;
}

bool CartanData::simply_laced() const {
  return std::all_of(c_.begin(), c_.end(), [](int v) { return v >= -1; });
}

int CartanData::max_abs_entry() const {
  int best = 0;
  for (int a = 0; a < rank_; ++a)
    for (int b = 0; b < rank_; ++b)
      if (a != b) best = std::max(best, std::abs((*this)(a, b)));
  return best;
}

Weight CartanData::simple_root(int b) const {
  Weight w = Weight::zero(rank_);
  for (int a = 0; a < rank_; ++a) w[a] = (*this)(a, b);
  return w;
}

Int CartanData::scaled_form(const Weight& mu, const Weight& nu) const {
  // (omega_a, omega_b) = d_a (C^{-1})_{ab}
  Int total = 0;
  for (int a = 0; a < rank_; ++a) {
    if (mu[a] == 0) continue;
    Int row = 0;
    for (int b = 0; b < rank_; ++b) row += Int(adjugate(a, b)) * nu[b];
    total += Int(mu[a]) * d_[static_cast<std::size_t>(a)] * row;
  }
  return total;
}

CartanData CartanData::transposed() const {
  std::vector<int> t(c_.size());
  for (int a = 0; a < rank_; ++a)
    for (int b = 0; b < rank_; ++b)
      t[static_cast<std::size_t>(b * rank_ + a)] = (*this)(a, b);
  return CartanData(family_, rank_, std::move(t));
}

void CartanData::derive() {
  const auto n = static_cast<std::size_t>(rank_);

  // Symmetrizer by propagation along the Dynkin graph.
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    auto a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < n; ++b) {
      int cab = c_[a * n + b], cba = c_[b * n + a];
      if (a == b || cab == 0) continue;
      Rational db = d[a] * cab / cba;
      if (d[b] == 0) {
        d[b] = db;
        stack.push_back(b);
      } else if (d[b] != db) {
        throw std::invalid_argument("Cartan matrix is not symmetrizable");
      }
    }
  }
  Int lcm_den = 1;
  for (const auto& v : d) lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(v));
  Int g = 0;
  for (const auto& v : d) g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(Rational(v * lcm_den)));
  d_.clear();
  for (const auto& v : d) d_.push_back(static_cast<int>(boost::multiprecision::numerator(Rational(v * lcm_den)) / g));

  // Inverse by exact Gauss-Jordan elimination, then adj = det * C^{-1}.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) m[a][b] = c_[a * n + b];
    m[a][n + a] = 1;
  }
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("singular Cartan matrix");
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    Rational p = m[col][col];
    det *= p;
    for (auto& v : m[col]) v /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  det_ = static_cast<long>(boost::multiprecision::numerator(det));
  adj_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Rational v = m[a][n + b] * det;
      if (boost::multiprecision::denominator(v) != 1) throw std::logic_error("non-integral adjugate");
      adj_[a * n + b] = static_cast<long>(boost::multiprecision::numerator(v));
    }

  // Positive roots by simple-root strings, processed in order of height.
  roots_.clear();
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < n; ++i) {
    Root r;
    r.simple.assign(n, 0);
    r.simple[i] = 1;
    seen.insert(r.simple);
    roots_.push_back(std::move(r));
  }
  for (std::size_t idx = 0; idx < roots_.size(); ++idx) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> beta = roots_[idx].simple;
      int pairing = 0;  // <beta, alpha_i^vee>
      for (std::size_t j = 0; j < n; ++j) pairing += c_[i * n + j] * beta[j];
      int p = 0;
      std::vector<int> down = beta;
      while (true) {
        --down[i];
        if (down[i] < 0 || !seen.count(down)) break;
        ++p;
      }
      if (p - pairing > 0) {
        ++beta[i];
        if (seen.insert(beta).second) {
          Root r;
          r.simple = beta;
          roots_.push_back(std::move(r));
        }
      }
    }
  }
  for (auto& r : roots_) {
    r.omega.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t j = 0; j < n; ++j) r.omega[a] += c_[a * n + j] * r.simple[j];
  }
  std::stable_sort(roots_.begin(), roots_.end(),
                   [](const Root& x, const Root& y) { return x.height() < y.height(); });
}

int b_entry(const CartanData& cartan, int a, int b, int i, int j) {
  const int cab = cartan(a, b);
  if (cab == 0) return 0;
  const int cba = cartan(b, a);
  const int mag = std::min(std::abs(cab) * j, std::abs(cba) * i);
  return cab > 0 ? mag : -mag;
}

Int weyl_dim(const CartanData& cartan, const Weight& lambda) {
  if (lambda.rank() != cartan.rank()) throw std::invalid_argument("weight rank mismatch");
  if (!lambda.is_dominant()) throw std::invalid_argument("weyl_dim needs a dominant weight, got " + lambda.to_string());
  const auto& d = cartan.symmetrizer();
  Int num = 1, den = 1;
  for (const auto& root : cartan.positive_roots()) {
    long top = 0, bottom = 0;
    for (int i = 0; i < cartan.rank(); ++i) {
      const long w = static_cast<long>(root.simple[static_cast<std::size_t>(i)]) * d[static_cast<std::size_t>(i)];
      top += w * (lambda[i] + 1);
      bottom += w;
    }
    num *= top;
    den *= bottom;
  }
  return num / den;
}

}  // namespace krv
