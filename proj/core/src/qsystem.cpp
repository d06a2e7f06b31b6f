#include <krv/qsystem.hpp>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace krv {

std::string to_string(Boundary b) {
  switch (b) {
    case Boundary::formal: return "formal";
    case Boundary::kr: return "kr";
    case Boundary::custom: return "custom";
  }
  return "?";
}

std::string to_string(QConvention c) { return c == QConvention::standard ? "standard" : "transposed"; }

std::string qsystem_variable_name(int node, int index) {
  return "x_" + std::to_string(node + 1) + "_" + std::to_string(index);
}

namespace {

VarSet boundary_vars(int rank) {
  std::vector<std::string> names;
  for (int a = 0; a < rank; ++a) names.push_back(qsystem_variable_name(a, 1));
  for (int a = 0; a < rank; ++a) names.push_back(qsystem_variable_name(a, 0));
  if (names.size() > kMaxVars) throw std::invalid_argument("rank too large for the symbolic backend");
  return VarSet(std::move(names));
}

}  // namespace

QSystemState::QSystemState(CartanData cartan, Boundary boundary, QConvention convention, VarSet vars)
    : cartan_(std::move(cartan)), boundary_(boundary), convention_(convention), vars_(std::move(vars)) {}

QSystemState QSystemState::initial(const CartanData& cartan, Boundary boundary, QConvention convention) {
  if (boundary == Boundary::custom) throw std::invalid_argument("custom boundary requires initial values");
  const int r = cartan.rank();
  QSystemState s(cartan, boundary, convention, boundary_vars(r));
  for (int a = 0; a < r; ++a) {
    auto x1 = MultivariatePoly::variable(s.vars_, static_cast<std::size_t>(a));
    auto x0 = boundary == Boundary::kr ? MultivariatePoly::constant(s.vars_, 1)
                                       : MultivariatePoly::variable(s.vars_, static_cast<std::size_t>(r + a));
    s.table_[{a, 0}] = Entry{std::make_shared<const MultivariateRational>(x0), std::nullopt};
    s.table_[{a, 1}] = Entry{std::make_shared<const MultivariateRational>(x1), std::nullopt};
  }
  return s;
}

QSystemState QSystemState::with_initial_values(const CartanData& cartan, std::vector<MultivariateRational> x0,
                                               std::vector<MultivariateRational> x1, QConvention convention) {
  const auto r = static_cast<std::size_t>(cartan.rank());
  if (x0.size() != r || x1.size() != r) throw std::invalid_argument("initial values must have one entry per node");
  VarSet vars = x0.front().vars();
  for (std::size_t a = 0; a < r; ++a)
    if (!(x0[a].vars() == vars) || !(x1[a].vars() == vars))
      throw std::invalid_argument("initial values must share one variable set");
  QSystemState s(cartan, Boundary::custom, convention, vars);
  for (std::size_t a = 0; a < r; ++a) {
    const int node = static_cast<int>(a);
    s.table_[{node, 0}] = Entry{std::make_shared<const MultivariateRational>(std::move(x0[a])), std::nullopt};
    s.table_[{node, 1}] = Entry{std::make_shared<const MultivariateRational>(std::move(x1[a])), std::nullopt};
  }
  return s;
}

std::size_t QSystemState::var_index(int node, int index) const {
  if (boundary_ == Boundary::custom) throw std::logic_error("custom boundary has no canonical variables");
  if (node < 0 || node >= cartan_.rank() || index < 0 || index > 1) throw std::out_of_range("no such boundary variable");
  return static_cast<std::size_t>(index == 1 ? node : cartan_.rank() + node);
}

bool QSystemState::has(int node, int index) const { return table_.count({node, index}) != 0; }

const MultivariateRational& QSystemState::at(int node, int index) const {
  auto it = table_.find({node, index});
  if (it == table_.end())
    throw std::out_of_range("Q-system entry " + qsystem_variable_name(node, index) + " not computed");
  return *it->second.value;
}

int QSystemState::reach(int node) const {
  int best = -1;
  for (const auto& [key, e] : table_)
    if (key.first == node) best = std::max(best, key.second);
  return best;
}

int QSystemState::entry(int a, int b) const { return convention_ == QConvention::standard ? cartan_(a, b) : cartan_(b, a); }

std::vector<QSystemState::Key> QSystemState::coupling_factors(int a, int i) const {
  std::vector<Key> out;
  for (int b = 0; b < cartan_.rank(); ++b) {
    if (b == a) continue;
    const int cab = entry(a, b);
    if (cab >= 0) continue;
    const int abs_ab = -cab;
    const int abs_ba = std::abs(entry(b, a));
    for (int j = 0; j < abs_ab; ++j) out.emplace_back(b, (abs_ba * i + j) / abs_ab);
  }
  return out;
}

MultivariateRational QSystemState::coupling_product(int a, int i) const {
  auto product = MultivariateRational::constant(vars_, 1);
  for (const auto& [b, idx] : coupling_factors(a, i)) product *= at(b, idx);
  return product;
}

void QSystemState::ensure(int node, int index) {
  if (has(node, index)) return;
  if (index < 2) throw std::logic_error("boundary entries are always present");
  const int i = index - 1;
  ensure(node, i);
  ensure(node, i - 1);
  for (const auto& [b, idx] : coupling_factors(node, i)) ensure(b, idx);

  const auto& xi = at(node, i);
  const auto& prev = at(node, i - 1);
  if (prev.is_zero())
    throw std::domain_error("Q-system division by zero: " + qsystem_variable_name(node, i - 1) + " vanishes");

  DivisionCertificate cert;
  cert.node = node;
  cert.index = index;
  bool laurent = xi.is_laurent_polynomial() && prev.is_laurent_polynomial();
  for (const auto& [b, idx] : coupling_factors(node, i)) laurent = laurent && at(b, idx).is_laurent_polynomial();

  std::shared_ptr<const MultivariateRational> value;
  if (laurent) {
    auto product = MultivariatePoly::constant(vars_, 1);
    for (const auto& [b, idx] : coupling_factors(node, i)) product = product * at(b, idx).as_laurent_polynomial();
    const auto& x = xi.as_laurent_polynomial();
    auto numerator = x * x - product;
    auto outcome = exact_divide(numerator, prev.as_laurent_polynomial());
    if (outcome.divisible()) {
      cert.exact = true;
      cert.polynomial = outcome.quotient->is_polynomial();
      value = std::make_shared<const MultivariateRational>(*outcome.quotient);
    } else {
      cert.remainder = outcome.remainder ? outcome.remainder->to_string() : std::string("?");
      value = std::make_shared<const MultivariateRational>(numerator, prev.as_laurent_polynomial());
    }
  } else {
    auto quotient = (xi * xi - coupling_product(node, i)) / prev;
    cert.exact = quotient.is_laurent_polynomial();
    cert.polynomial = cert.exact && quotient.as_laurent_polynomial().is_polynomial();
    if (!cert.exact) cert.remainder = "denominator " + quotient.denominator().to_string();
    value = std::make_shared<const MultivariateRational>(std::move(quotient));
  }
  table_[{node, index}] = Entry{std::move(value), std::move(cert)};
}

std::vector<DivisionCertificate> QSystemState::certificates() const {
  std::vector<DivisionCertificate> out;
  for (const auto& [key, e] : table_)
    if (e.certificate) out.push_back(*e.certificate);
  return out;
}

bool QSystemState::all_exact() const {
  return std::all_of(table_.begin(), table_.end(),
                     [](const auto& kv) { return !kv.second.certificate || kv.second.certificate->exact; });
}

QSystemState QSystemState::extended() const {
  QSystemState next = *this;
  for (int a = 0; a < cartan_.rank(); ++a) next.ensure(a, depth_ + 1);
  next.depth_ = depth_ + 1;
  return next;
}

QSystemState QSystemState::extended_to(int target) const {
  QSystemState s = *this;
  while (s.depth_ < target) s = s.extended();
  return s;
}

bool QSystemState::recursion_holds() const {
  for (const auto& [key, e] : table_) {
    const auto [a, i] = key;
    if (i < 1 || !has(a, i + 1) || !has(a, i - 1)) continue;
    bool available = true;
    for (const auto& [b, idx] : coupling_factors(a, i)) available = available && has(b, idx);
    if (!available) continue;
    const auto& xi = at(a, i);
    if (!(at(a, i + 1) * at(a, i - 1) == xi * xi - coupling_product(a, i))) return false;
  }
  return true;
}

QSystemState qsystem_extend(const QSystemState& state) {
  if (state.depth() < 1) throw std::invalid_argument("Q-system state must have depth >= 1");
  return state.extended();
}

// ---------------------------------------------------------------------------

PolynomialityReport verify_polynomiality(const CartanData& cartan, int depth, QConvention convention) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  auto state = QSystemState::initial(cartan, Boundary::kr, convention).extended_to(depth);
  PolynomialityReport report;
  report.algebra = cartan.name();
  report.depth = depth;
  report.convention = convention;
  for (const auto& cert : state.certificates()) {
    PolynomialityEntry e;
    e.node = cert.node;
    e.index = cert.index;
    e.exact = cert.exact;
    e.polynomial = cert.polynomial;
    e.remainder = cert.remainder;
    const auto& value = state.at(cert.node, cert.index);
    if (value.is_laurent_polynomial()) {
      const auto& p = value.as_laurent_polynomial();
      e.degree = p.total_degree();
      e.terms = p.size();
    }
    if (!(e.exact && e.polynomial)) ++report.failures;
    report.entries.push_back(std::move(e));
  }
  return report;
}

ChebyshevReport a1_chebyshev_report(int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  const auto cartan = CartanData(Family::A, 1);
  auto state = QSystemState::initial(cartan, Boundary::kr).extended_to(depth);
  ChebyshevReport report;
  report.depth = depth;
  const auto& x1 = state.at(0, 1).as_laurent_polynomial();
  const auto minus_one = MultivariatePoly::constant(state.vars(), -1);
  std::vector<Int> point(state.vars().size(), Int(1));
  point[state.var_index(0, 1)] = 2;
  for (int i = 0; i <= depth; ++i) {
    const auto& xi = state.at(0, i).as_laurent_polynomial();
    const Int v = xi.evaluate(point);
    report.values_at_two.emplace_back(i, v);
    if (v != i + 1) report.dimensions = false;
    if (i >= 1 && i < depth) {
      const auto& next = state.at(0, i + 1).as_laurent_polynomial();
      const auto& prev = state.at(0, i - 1).as_laurent_polynomial();
      if (!(next == x1 * xi - prev)) report.three_term = false;
      if (!(next * prev - xi * xi == minus_one)) report.conserved = false;
    }
  }
  return report;
}

bool a1_chebyshev_check(int depth) { return a1_chebyshev_report(depth).ok(); }

bool DimensionReport::all_match() const {
  return std::all_of(entries.begin(), entries.end(), [](const DimensionEntry& e) { return e.value == e.expected; });
}

DimensionReport character_dimension_check(const CartanData& cartan, int depth) {
  if (cartan.family() != Family::A) throw std::invalid_argument("character_dimension_check requires type A");
  auto state = QSystemState::initial(cartan, Boundary::kr).extended_to(depth);
  const int r = cartan.rank();
  std::vector<Int> point(state.vars().size(), Int(1));
  for (int b = 0; b < r; ++b) {
    Weight w = Weight::zero(r);
    w[b] = 1;
    point[state.var_index(b, 1)] = weyl_dim(cartan, w);
  }
  DimensionReport report;
  report.algebra = cartan.name();
  report.depth = depth;
  for (int a = 0; a < r; ++a)
    for (int i = 0; i <= depth; ++i) {
      Weight w = Weight::zero(r);
      w[a] = i;
      report.entries.push_back({a, i, state.at(a, i).as_laurent_polynomial().evaluate(point), weyl_dim(cartan, w)});
    }
  return report;
}

}  // namespace krv
