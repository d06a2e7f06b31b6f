#include "cli.hpp"

#include "worker_pool.hpp"

#include <krv/charoracle.hpp>
#include <krv/fermionic.hpp>
#include <krv/genfun.hpp>
#include <krv/qsystem.hpp>
#include <krv/sweep.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#ifndef KRV_VERSION
#define KRV_VERSION "0.0.0"
#endif

namespace krv::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// JSON helpers

Json poly_json(const GradedPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, c.str()}));
  return Json{{"text", p.to_string()}, {"half_exponent_terms", terms}, {"value_at_1", p.value_at_one().str()}};
}

Json stats_json(const TermStats& s) {
  return Json{{"total", s.total}, {"restricted", s.restricted}, {"cancelled", s.cancelled}, {"nonzero_dropped", s.nonzero_dropped}};
}

Json totals_json(const std::optional<ModeTotals>& t) {
  if (!t) return nullptr;
  return Json(t->m);
}

Json mpoly_json(const MultivariatePoly& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json exps = Json::array();
    for (std::size_t i = 0; i < p.vars().size(); ++i) exps.push_back(t.exps[i]);
    terms.push_back(Json::array({exps, t.coeff.str()}));
  }
  return Json{{"variables", p.vars().names()}, {"text", p.to_string()}, {"terms", terms}};
}

Json document(const std::string& command, Json input) {
  return Json{{"schema", kSchema}, {"tool", {{"name", "krverify"}, {"version", KRV_VERSION}}}, {"command", command}, {"input", std::move(input)}};
}

struct Session {
  std::ostream& out;
  std::ostream& err;
  std::string json_path;
  bool timing = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  int finish(Json doc, bool passed) {
    doc["passed"] = passed;
    if (timing) {
      doc["wall_clock_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }
    if (!json_path.empty()) {
      std::ofstream f(json_path);
      if (!f) throw UsageError("cannot write " + json_path);
      f << doc.dump(2) << '\n';
    }
    return passed ? kPass : kFail;
  }
};

// ---------------------------------------------------------------------------
// Parsing helpers

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

CartanData parse_algebra(const std::string& label) {
  try {
    return CartanData::parse(label);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<CartanData> parse_algebras(const std::string& list) {
  std::vector<CartanData> out;
  for (const auto& label : split(list, ',')) out.push_back(parse_algebra(label));
  if (out.empty()) throw UsageError("--algebra needs at least one algebra");
  return out;
}

Weight parse_lambda(const std::optional<std::string>& text, int rank) {
  if (!text) return Weight::zero(rank);
  try {
    auto w = Weight::parse(*text, rank);
    if (!w.is_dominant()) throw UsageError("--lambda must be dominant");
    return w;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

KrMultiplicities parse_n(const std::string& text, int rank) {
  try {
    return KrMultiplicities::parse(text, rank);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

template <class F>
auto usage_guard(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

bool classical_small(const CartanData& c) {
  return c.rank() <= 4 && (c.family() == Family::A || c.family() == Family::B || c.family() == Family::C ||
                           c.family() == Family::D);
}

// ---------------------------------------------------------------------------
// msum / nsum

struct SumOptions {
  std::string algebra;
  std::optional<std::string> lambda;
  std::string n;
  std::string grading = "paper";
  std::string vacancy = "all";
  std::optional<int> k;
};

int cmd_sum(Session& s, const SumOptions& o, bool restricted) {
  const auto cartan = parse_algebra(o.algebra);
  FermionicInput input{cartan, parse_lambda(o.lambda, cartan.rank()), parse_n(o.n, cartan.rank()),
                       usage_guard([&] { return parse_grading(o.grading); }),
                       usage_guard([&] { return parse_vacancy_scope(o.vacancy); }), o.k};
  const auto sums = usage_guard([&] { return fermionic_sums(input); });
  const auto& poly = restricted ? sums.m(input.grading) : sums.n(input.grading);
  s.out << poly.to_string() << '\n';
  Json in{{"algebra", cartan.name()},
          {"lambda", input.lambda.to_string()},
          {"n", input.n.to_string()},
          {"grading", to_string(input.grading)},
          {"vacancy", to_string(input.vacancy_scope)},
          {"max_string_length", o.k ? Json(*o.k) : Json(nullptr)}};
  auto doc = document(restricted ? "msum" : "nsum", std::move(in));
  doc["result"] = {{"poly", poly_json(poly)},
                   {"value_at_1", (restricted ? sums.m_at_one : sums.n_at_one).str()},
                   {"mode_totals", totals_json(sums.totals)},
                   {"term_stats", stats_json(sums.stats)}};
  return s.finish(std::move(doc), true);
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::string algebras;
  int load = 6;
  std::optional<std::string> n;
  std::optional<std::string> lambda;
  std::string mode = "auto";
  std::size_t samples = 250;
  std::uint64_t seed = 1;
  std::string vacancy = "all";
  bool no_oracle = false;
  bool no_sum_rule = false;
  unsigned workers = 1;
};

Json case_json(const CaseResult& r) {
  const auto& p = r.paper;
  Json j{{"key", r.input.key()},
         {"n", r.input.n.to_string()},
         {"lambda", r.input.lambda.to_string()},
         {"mode_totals", totals_json(p.totals)},
         {"m_at_1", p.m_at_one.str()},
         {"n_at_1", p.n_at_one.str()},
         {"equal_at_1", p.equal_at_1},
         {"graded",
          {{"paper", {{"equal", p.equal_graded}, {"m", p.m.to_string()}, {"n", p.n.to_string()}}},
           {"cocharge",
            {{"equal", r.graded_equal(Grading::cocharge)}, {"m", r.m_cocharge.to_string()}, {"n", r.n_cocharge.to_string()}}}}},
         {"oracle", r.oracle ? Json(r.oracle->str()) : Json(nullptr)},
         {"term_stats", stats_json(p.counts)},
         {"passed", r.passed()}};
  return j;
}

int cmd_verify(Session& s, const VerifyOptions& o) {
  const auto algebras = parse_algebras(o.algebras);
  if (o.load < 0) throw UsageError("--load must be >= 0");
  if (o.mode != "auto" && o.mode != "exhaustive" && o.mode != "sampled")
    throw UsageError("--mode must be auto, exhaustive or sampled");
  if (o.lambda && !o.n) throw UsageError("--lambda needs --n");
  CaseOptions copts;
  copts.vacancy_scope = usage_guard([&] { return parse_vacancy_scope(o.vacancy); });
  copts.oracle = !o.no_oracle;

  Json in{{"algebras", Json::array()},
          {"load", o.load},
          {"n", o.n ? Json(*o.n) : Json(nullptr)},
          {"lambda", o.lambda ? Json(*o.lambda) : Json(nullptr)},
          {"mode", o.mode},
          {"samples", o.samples},
          {"seed", o.seed},
          {"vacancy", o.vacancy},
          {"oracle", copts.oracle},
          {"conventions", {"paper", "cocharge"}}};
  for (const auto& c : algebras) in["algebras"].push_back(c.name());
  auto doc = document("verify", std::move(in));
  doc["algebras"] = Json::array();
  bool all_passed = true;

  for (const auto& cartan : algebras) {
    std::vector<SweepCase> cases;
    std::string mode = o.mode;
    if (o.n) {
      mode = "single";
      const auto n = parse_n(*o.n, cartan.rank());
      if (o.lambda) cases.push_back({n, parse_lambda(o.lambda, cartan.rank())});
      else
        for (auto& l : reachable_weights(cartan, n)) cases.push_back({n, std::move(l)});
    } else {
      if (mode == "auto") mode = (cartan.family() == Family::A && cartan.rank() <= 2) ? "exhaustive" : "sampled";
      cases = mode == "exhaustive" ? exhaustive_cases(cartan, o.load) : sampled_cases(cartan, o.load, o.samples, o.seed);
    }
    const auto results = parallel_map<CaseResult>(cases.size(), o.workers, [&](std::size_t i) {
      return run_case(cartan, cases[i], copts);
    });

    std::size_t passed = 0, graded_paper = 0, graded_cocharge = 0, oracle_checked = 0, oracle_ok = 0;
    Json case_list = Json::array();
    for (const auto& r : results) {
      passed += r.passed();
      graded_paper += r.graded_equal(Grading::paper);
      graded_cocharge += r.graded_equal(Grading::cocharge);
      if (r.oracle) {
        ++oracle_checked;
        oracle_ok += r.oracle_ok();
      }
      case_list.push_back(case_json(r));
    }

    Json rules = Json::array();
    std::size_t rules_ok = 0;
    if (cartan.family() == Family::A && !o.no_sum_rule) {
      std::set<std::string> seen;
      std::vector<KrMultiplicities> distinct;
      for (const auto& c : cases)
        if (seen.insert(c.n.to_string()).second) distinct.push_back(c.n);
      const auto sums = parallel_map<SumRule>(distinct.size(), o.workers, [&](std::size_t i) {
        return dimension_sum_rule(cartan, distinct[i]);
      });
      for (std::size_t i = 0; i < distinct.size(); ++i) {
        rules_ok += sums[i].holds();
        rules.push_back({{"n", distinct[i].to_string()}, {"lhs", sums[i].lhs.str()}, {"rhs", sums[i].rhs.str()}, {"holds", sums[i].holds()}});
      }
    }

    const bool ok = passed == results.size() && rules_ok == rules.size();
    all_passed = all_passed && ok;
    s.out << cartan.name() << " (" << mode << "): q=1 " << passed << "/" << results.size() << " passed; graded paper "
          << graded_paper << "/" << results.size() << ", cocharge " << graded_cocharge << "/" << results.size();
    if (oracle_checked) s.out << "; oracle " << oracle_ok << "/" << oracle_checked;
    if (!rules.empty()) s.out << "; sum rule " << rules_ok << "/" << rules.size();
    s.out << (ok ? "" : "  FAILED") << '\n';

    doc["algebras"].push_back({{"algebra", cartan.name()},
                               {"mode", mode},
                               {"summary",
                                {{"cases", results.size()},
                                 {"equal_at_1", passed},
                                 {"graded_equal", {{"paper", graded_paper}, {"cocharge", graded_cocharge}}},
                                 {"oracle_checked", oracle_checked},
                                 {"oracle_agree", oracle_ok},
                                 {"sum_rules", rules.size()},
                                 {"sum_rules_hold", rules_ok},
                                 {"passed", ok}}},
                               {"cases", std::move(case_list)},
                               {"sum_rules", std::move(rules)}});
  }
  return s.finish(std::move(doc), all_passed);
}

// ---------------------------------------------------------------------------
// qsystem

struct QSystemOptions {
  std::string algebras;
  std::optional<int> depth;
  std::string boundary = "kr";
  std::string convention = "standard";
  int chebyshev_depth = 12;
  bool tables = false;
};

int default_depth(const CartanData& c) { return classical_small(c) ? 10 : 6; }

int cmd_qsystem(Session& s, const QSystemOptions& o) {
  const auto algebras = parse_algebras(o.algebras);
  if (o.depth && *o.depth < 1) throw UsageError("--depth must be >= 1");
  if (o.boundary != "kr" && o.boundary != "formal") throw UsageError("--boundary must be kr or formal");
  if (o.convention != "standard" && o.convention != "transposed") throw UsageError("--convention must be standard or transposed");
  const auto convention = o.convention == "standard" ? QConvention::standard : QConvention::transposed;
  const auto boundary = o.boundary == "kr" ? Boundary::kr : Boundary::formal;

  Json in{{"algebras", Json::array()},
          {"depth", o.depth ? Json(*o.depth) : Json(nullptr)},
          {"boundary", o.boundary},
          {"convention", o.convention},
          {"chebyshev_depth", o.chebyshev_depth},
          {"tables", o.tables}};
  for (const auto& c : algebras) in["algebras"].push_back(c.name());
  auto doc = document("qsystem", std::move(in));
  doc["algebras"] = Json::array();
  bool all_passed = true;

  for (const auto& cartan : algebras) {
    const int depth = o.depth.value_or(default_depth(cartan));
    const auto state = QSystemState::initial(cartan, boundary, convention).extended_to(depth);
    Json entries = Json::array();
    std::size_t failures = 0;
    for (const auto& cert : state.certificates()) {
      const auto& value = state.at(cert.node, cert.index);
      const bool ok = cert.exact && (boundary == Boundary::formal || cert.polynomial);
      failures += !ok;
      Json e{{"name", qsystem_variable_name(cert.node, cert.index)},
             {"node", cert.node + 1},
             {"index", cert.index},
             {"exact", cert.exact},
             {"polynomial", cert.polynomial}};
      if (value.is_laurent_polynomial()) {
        e["degree"] = value.as_laurent_polynomial().total_degree();
        e["terms"] = value.as_laurent_polynomial().size();
        if (o.tables) e["value"] = mpoly_json(value.as_laurent_polynomial());
      } else {
        e["value_text"] = value.to_string();
      }
      if (!cert.remainder.empty()) e["remainder"] = cert.remainder;
      entries.push_back(std::move(e));
    }
    const bool recursion = state.recursion_holds();
    Json alg{{"algebra", cartan.name()},
             {"depth", depth},
             {"entries", std::move(entries)},
             {"division_failures", failures},
             {"recursion_identity", recursion}};
    bool ok = failures == 0 && recursion;
    std::string extra;

    if (cartan.family() == Family::A && cartan.rank() == 1 && boundary == Boundary::kr) {
      const auto cheb = a1_chebyshev_report(o.chebyshev_depth);
      Json values = Json::array();
      for (const auto& [i, v] : cheb.values_at_two) values.push_back(Json::array({i, v.str()}));
      alg["chebyshev"] = {{"depth", cheb.depth},
                          {"three_term", cheb.three_term},
                          {"conserved_quantity", cheb.conserved},
                          {"dimensions", cheb.dimensions},
                          {"values_at_2", values}};
      ok = ok && cheb.ok();
      extra += std::string("; chebyshev ") + (cheb.ok() ? "ok" : "FAILED");
    }
    if (cartan.family() == Family::A && boundary == Boundary::kr && convention == QConvention::standard) {
      const auto dims = character_dimension_check(cartan, depth);
      std::size_t matched = 0;
      for (const auto& e : dims.entries) matched += e.value == e.expected;
      alg["dimensions"] = {{"checked", dims.entries.size()}, {"matched", matched}};
      ok = ok && dims.all_match();
      extra += "; dimensions " + std::to_string(matched) + "/" + std::to_string(dims.entries.size());
    }
    alg["passed"] = ok;
    all_passed = all_passed && ok;
    s.out << cartan.name() << " depth " << depth << " (" << o.boundary << ", " << o.convention << "): "
          << state.certificates().size() - failures << "/" << state.certificates().size() << " divisions certified"
          << (recursion ? "" : "; recursion identity FAILED") << extra << (ok ? "" : "  FAILED") << '\n';
    doc["algebras"].push_back(std::move(alg));
  }
  return s.finish(std::move(doc), all_passed);
}

// ---------------------------------------------------------------------------
// genfun

struct GenfunOptions {
  std::string algebras = "A1";
  std::optional<int> k;
  std::optional<std::string> lambda;
  std::optional<std::string> n;
  std::optional<int> lambda_max;
  std::optional<int> n_max;
  std::optional<int> cap;
  std::size_t order = 12;
  int m1_q_max = 6;
  int m1_cap = 12;
  long expand_limit = 1000000;
  std::optional<int> lemma_k_max;
  std::optional<int> lemma_n_max;
  unsigned workers = 1;
};

/// Every spec with 1 <= k' <= k_max (k' >= k_min), 0 <= l^(a) <= l_max, 0 <= n_j^(a) <= n_max (j <= k').
std::vector<ZSpec> spec_grid(const CartanData& cartan, int k_min, int k_max, int l_max, int n_max) {
  std::vector<ZSpec> out;
  const int r = cartan.rank();
  for (int k = k_min; k <= k_max; ++k) {
    std::vector<int> ls(static_cast<std::size_t>(r), 0);
    while (true) {
      Weight lambda(ls);
      std::vector<int> ns(static_cast<std::size_t>(r * k), 0);
      while (true) {
        KrMultiplicities n(r);
        for (int a = 0; a < r; ++a)
          for (int j = 1; j <= k; ++j) n.set(a, j, ns[static_cast<std::size_t>(a * k + j - 1)]);
        out.push_back({cartan, lambda, n, k});
        std::size_t i = 0;
        for (; i < ns.size(); ++i) {
          if (ns[i] < n_max) {
            ++ns[i];
            break;
          }
          ns[i] = 0;
        }
        if (i == ns.size()) break;
      }
      std::size_t i = 0;
      for (; i < ls.size(); ++i) {
        if (ls[i] < l_max) {
          ++ls[i];
          break;
        }
        ls[i] = 0;
      }
      if (i == ls.size()) break;
    }
  }
  return out;
}

struct SpecOutcome {
  Json json;
  bool recursion_ok = true;
  bool series_ok = true;
  bool constant_ok = true;
  bool ran_recursion = false;
  bool ran_expanded = false;
  bool ran_series = false;
  bool ran_constant = false;
};

int cmd_genfun(Session& s, const GenfunOptions& o) {
  const auto algebras = parse_algebras(o.algebras);
  if (o.m1_q_max < 0) throw UsageError("--m1-q-max must be >= 0");
  if (o.k && *o.k < 1) throw UsageError("--k must be >= 1");
  if ((o.lambda || o.n) && !o.k) throw UsageError("a single spec needs --k together with --lambda/--n");
  if (o.order < 1) throw UsageError("--order must be >= 1");

  Json in{{"algebras", Json::array()},
          {"k", o.k ? Json(*o.k) : Json(nullptr)},
          {"lambda", o.lambda ? Json(*o.lambda) : Json(nullptr)},
          {"n", o.n ? Json(*o.n) : Json(nullptr)},
          {"lambda_max", o.lambda_max ? Json(*o.lambda_max) : Json(nullptr)},
          {"n_max", o.n_max ? Json(*o.n_max) : Json(nullptr)},
          {"cap", o.cap ? Json(*o.cap) : Json(nullptr)},
          {"order", o.order},
          {"m1_q_max", o.m1_q_max},
          {"m1_cap", o.m1_cap},
          {"expand_limit", o.expand_limit}};
  for (const auto& c : algebras) in["algebras"].push_back(c.name());
  auto doc = document("genfun", std::move(in));
  bool all_passed = true;

  // m1 summation identity
  Json m1 = Json::array();
  bool m1_ok = true;
  for (int q = 0; q <= o.m1_q_max; ++q) {
    const int cap = std::max(o.m1_cap, q + 5);
    const bool ok = m1_identity_check(q, cap);
    m1_ok = m1_ok && ok;
    m1.push_back({{"q", q}, {"cap", cap}, {"equal", ok}});
  }
  doc["m1_identity"] = m1;
  all_passed = all_passed && m1_ok;
  s.out << "m1 identity q=0.." << o.m1_q_max << ": " << (m1_ok ? "ok" : "FAILED") << '\n';

  doc["algebras"] = Json::array();
  for (const auto& cartan : algebras) {
    if (!cartan.simply_laced()) throw UsageError("generating functions need a simply-laced algebra, got " + cartan.name());
    const bool a1 = cartan.rank() == 1;
    std::vector<ZSpec> specs;
    std::vector<ZSpec> lemma_specs;
    if (o.k && (o.lambda || o.n)) {
      ZSpec spec{cartan, parse_lambda(o.lambda, cartan.rank()), parse_n(o.n.value_or(""), cartan.rank()), *o.k};
      usage_guard([&] {
        spec.validate();
        return 0;
      });
      specs.push_back(spec);
      lemma_specs.push_back(spec);
    } else {
      // grids grow like 2^(rank * (k + 1)), so the defaults shrink with the rank
      const int r = cartan.rank();
      const int k_max = o.k.value_or(a1 ? 4 : r <= 4 ? 3 : 2);
      const int l_max = o.lambda_max.value_or(a1 ? 3 : r <= 4 ? 1 : 0);
      specs = spec_grid(cartan, 1, k_max, l_max, o.n_max.value_or(a1 ? 4 : 1));
      lemma_specs = spec_grid(cartan, 1, o.lemma_k_max.value_or(a1 ? 3 : r <= 3 ? 2 : 1), l_max,
                              o.lemma_n_max.value_or(a1 ? 4 : 1));
    }

    std::map<int, std::shared_ptr<RecursionVerifier>> verifiers;
    for (const auto& spec : specs)
      if (spec.k >= 2 && !verifiers.count(spec.k)) verifiers[spec.k] = std::make_shared<RecursionVerifier>(cartan, spec.k);

    const auto outcomes = parallel_map<SpecOutcome>(specs.size(), o.workers, [&](std::size_t i) {
      const auto& spec = specs[i];
      SpecOutcome out;
      out.json = {{"spec", spec.to_string()}, {"k", spec.k}, {"lambda", spec.lambda.to_string()}, {"n", spec.n.to_string()}};
      if (spec.k >= 2) {
        const auto r = verifiers.at(spec.k)->verify(spec.lambda, spec.n, o.expand_limit);
        out.ran_recursion = true;
        out.recursion_ok = r.holds();
        out.ran_expanded = r.expanded_equal.has_value();
        out.json["recursion"] = {{"shift_certified", r.shift_certified},
                                 {"factored_equal", r.factored_equal},
                                 {"expanded_equal", r.expanded_equal ? Json(*r.expanded_equal) : Json(nullptr)},
                                 {"holds", r.holds()}};
      }
      if (a1) {
        const auto cmp = compare_direct_with_closed(spec, o.order);
        out.ran_series = true;
        out.series_ok = cmp.equal;
        out.json["series"] = {{"compared_exponents", cmp.compared}, {"equal", cmp.equal}, {"direct", cmp.direct.to_string()}};
        if (!cmp.equal) out.json["series"]["closed"] = cmp.closed.to_string();
        const Int ct = constant_term_extract(spec);
        const Int m1v = fermionic_sums(fermionic_input_for(spec), false).m_at_one;
        out.ran_constant = true;
        out.constant_ok = ct == m1v;
        out.json["constant_term"] = {{"extracted", ct.str()}, {"m_at_1", m1v.str()}, {"equal", out.constant_ok}};
      }
      return out;
    });

    const auto lemmas = parallel_map<LemmaReport>(lemma_specs.size(), o.workers, [&](std::size_t i) {
      const auto& spec = lemma_specs[i];
      const int cap = o.cap.value_or(a1 ? default_tail_cap(spec) : std::min(default_tail_cap(spec), cartan.rank() <= 4 ? 3 : 2));
      return constant_term_lemma_check(spec, cap);
    });

    std::size_t rec_run = 0, rec_ok = 0, rec_expanded = 0, ser_run = 0, ser_ok = 0, ct_run = 0, ct_ok = 0;
    Json spec_list = Json::array();
    for (const auto& out : outcomes) {
      rec_run += out.ran_recursion;
      rec_ok += out.ran_recursion && out.recursion_ok;
      rec_expanded += out.ran_expanded;
      ser_run += out.ran_series;
      ser_ok += out.ran_series && out.series_ok;
      ct_run += out.ran_constant;
      ct_ok += out.ran_constant && out.constant_ok;
      spec_list.push_back(out.json);
    }
    LemmaReport lemma_total;
    Json counterexamples = Json::array();
    for (const auto& l : lemmas) {
      lemma_total.tails += l.tails;
      lemma_total.checked += l.checked;
      lemma_total.nonzero += l.nonzero;
      for (const auto& c : l.counterexamples)
        counterexamples.push_back({{"spec", l.spec}, {"cap", l.cap}, {"p", c.p}, {"node", c.node + 1}, {"tail", c.tail}, {"term", c.term}, {"reason", c.reason}});
    }
    const bool ok = rec_ok == rec_run && ser_ok == ser_run && ct_ok == ct_run && counterexamples.empty();
    all_passed = all_passed && ok;
    s.out << cartan.name() << ": recursion " << rec_ok << "/" << rec_run << " (" << rec_expanded << " expanded)";
    if (a1) s.out << "; series " << ser_ok << "/" << ser_run << "; constant term " << ct_ok << "/" << ct_run;
    s.out << "; lemma " << lemma_total.checked << " negative-vacancy terms (" << lemma_total.nonzero << " non-zero), "
          << counterexamples.size() << " counterexamples" << (ok ? "" : "  FAILED") << '\n';
    doc["algebras"].push_back({{"algebra", cartan.name()},
                               {"summary",
                                {{"specs", specs.size()},
                                 {"recursion", {{"run", rec_run}, {"holds", rec_ok}, {"expanded", rec_expanded}}},
                                 {"series", {{"run", ser_run}, {"equal", ser_ok}, {"order", o.order}}},
                                 {"constant_term", {{"run", ct_run}, {"equal", ct_ok}}},
                                 {"lemma",
                                  {{"specs", lemma_specs.size()},
                                   {"tails", lemma_total.tails},
                                   {"checked", lemma_total.checked},
                                   {"nonzero", lemma_total.nonzero},
                                   {"counterexamples", counterexamples.size()}}},
                                 {"passed", ok}}},
                               {"specs", std::move(spec_list)},
                               {"lemma_counterexamples", std::move(counterexamples)}});
  }
  return s.finish(std::move(doc), all_passed);
}

}  // namespace

// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact fermionic sums, Q-systems and generating functions for Kirillov-Reshetikhin tensor products",
               "krverify"};
  app.require_subcommand(1);
  app.set_version_flag("--version", KRV_VERSION);

  std::string json_path;
  bool timing = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--json", json_path, "Write the JSON report to this path");
    sub->add_flag("--timing", timing, "Include wall-clock time in the JSON report");
  };

  SumOptions sum;
  auto add_sum = [&](CLI::App* sub) {
    sub->add_option("--algebra", sum.algebra, "Algebra label, e.g. A2, G2")->required();
    sub->add_option("--lambda", sum.lambda, "Dominant weight in fundamental-weight coordinates, e.g. 1,0");
    sub->add_option("--n", sum.n, "KR multiplicities \"a:j=count;...\"");
    sub->add_option("--grading", sum.grading, "paper|cocharge");
    sub->add_option("--vacancy", sum.vacancy, "all|occupied");
    sub->add_option("--k", sum.k, "Exclude strings longer than k");
    add_common(sub);
  };
  auto* msum = app.add_subcommand("msum", "Restricted fermionic sum M");
  add_sum(msum);
  auto* nsum = app.add_subcommand("nsum", "Unrestricted fermionic sum N");
  add_sum(nsum);

  VerifyOptions ver;
  auto* verify = app.add_subcommand("verify", "Check M = N over a sweep (with the type-A character oracle)");
  verify->add_option("--algebra", ver.algebras, "Comma-separated algebras")->required();
  verify->add_option("--load", ver.load, "Bound on sum_{a,j} j n_j^(a)");
  verify->add_option("--n", ver.n, "Single multiplicity array instead of a sweep");
  verify->add_option("--lambda", ver.lambda, "Single weight (with --n)");
  verify->add_option("--mode", ver.mode, "auto|exhaustive|sampled");
  verify->add_option("--samples", ver.samples, "Cases per algebra in sampled mode");
  verify->add_option("--seed", ver.seed, "Seed for sampled sweeps");
  verify->add_option("--vacancy", ver.vacancy, "all|occupied");
  verify->add_flag("--no-oracle", ver.no_oracle, "Skip the character oracle");
  verify->add_flag("--no-sum-rule", ver.no_sum_rule, "Skip the dimension sum rule");
  verify->add_option("--workers", ver.workers, "Worker threads");
  add_common(verify);

  QSystemOptions qs;
  auto* qsystem = app.add_subcommand("qsystem", "Iterate and certify the Q-system");
  qsystem->add_option("--algebra", qs.algebras, "Comma-separated algebras")->required();
  qsystem->add_option("--depth", qs.depth, "Depth (default 10 for classical rank <= 4, else 6)");
  qsystem->add_option("--boundary", qs.boundary, "kr|formal");
  qsystem->add_option("--convention", qs.convention, "standard|transposed");
  qsystem->add_option("--chebyshev-depth", qs.chebyshev_depth, "Depth of the A1 Chebyshev checks");
  qsystem->add_flag("--tables", qs.tables, "Include every polynomial in the JSON report");
  add_common(qsystem);

  GenfunOptions gf;
  auto* genfun = app.add_subcommand("genfun", "Check the generating-function identities");
  genfun->add_option("--algebra", gf.algebras, "Comma-separated simply-laced algebras (default A1)");
  genfun->add_option("--k", gf.k, "Truncation level (largest k in a sweep)");
  genfun->add_option("--lambda", gf.lambda, "Single spec weight");
  genfun->add_option("--n", gf.n, "Single spec multiplicities");
  genfun->add_option("--lambda-max", gf.lambda_max, "Sweep bound on each l^(a)");
  genfun->add_option("--n-max", gf.n_max, "Sweep bound on each n_j^(a)");
  genfun->add_option("--cap", gf.cap, "Tail cap for the constant-term lemma");
  genfun->add_option("--order", gf.order, "Exponents compared between the direct and closed series");
  genfun->add_option("--m1-q-max", gf.m1_q_max, "Largest q for the m1 summation identity");
  genfun->add_option("--m1-cap", gf.m1_cap, "Terms compared in the m1 identity");
  genfun->add_option("--expand-limit", gf.expand_limit, "Term-count budget for the expanded recursion check (0 disables)");
  genfun->add_option("--lemma-k-max", gf.lemma_k_max, "Largest k in the lemma sweep");
  genfun->add_option("--lemma-n-max", gf.lemma_n_max, "Bound on n entries in the lemma sweep");
  genfun->add_option("--workers", gf.workers, "Worker threads");
  add_common(genfun);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  Session session{out, err, json_path, timing};
  try {
    if (msum->parsed()) return cmd_sum(session, sum, true);
    if (nsum->parsed()) return cmd_sum(session, sum, false);
    if (verify->parsed()) return cmd_verify(session, ver);
    if (qsystem->parsed()) return cmd_qsystem(session, qs);
    if (genfun->parsed()) return cmd_genfun(session, gf);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}

}  // namespace krv::cli
