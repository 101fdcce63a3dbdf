#include "clusterf/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "clusterf/closed_form.hpp"
#include "clusterf/error.hpp"
#include "clusterf/folding.hpp"
#include "clusterf/oracle.hpp"
#include "clusterf/polygon.hpp"

namespace clusterf {

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Formulas: return "formulas";
    case Suite::Quantum: return "quantum";
    case Suite::Folding: return "folding";
    case Suite::Polygon: return "polygon";
  }
  return "?";
}

std::vector<Suite> suites_from_string(const std::string& s) {
  if (s == "all") return {Suite::Formulas, Suite::Quantum, Suite::Folding, Suite::Polygon};
  for (Suite x : {Suite::Formulas, Suite::Quantum, Suite::Folding, Suite::Polygon})
    if (suite_name(x) == s) return {x};
  throw Error(ErrorKind::InvalidInput, "unknown suite '" + s + "' (expected formulas, quantum, folding, polygon or all)");
}

namespace {

struct CaseOutcome {
  std::size_t checks = 0;
  std::vector<Mismatch> mismatches;
};

/// Collects results for one corpus case.
class CaseLog {
 public:
  explicit CaseLog(const CorpusCase& c) : case_(c) {}

  void check(bool ok, const RootVector& d, const RootVector& e, const std::string& detail) {
    ++out_.checks;
    if (!ok) fail(d, e, detail);
  }
  void fail(const RootVector& d, const RootVector& e, const std::string& detail) {
    out_.mismatches.push_back(
        {case_.type.rank, case_.type.name(), case_.orientation, d, e, case_.arrows(), detail});
  }
  CaseOutcome take() { return std::move(out_); }

 private:
  const CorpusCase& case_;
  CaseOutcome out_;
};

/// Runs work over every case, serially or with OpenMP, and merges the results
/// in a canonical order.
SuiteResult run_cases(Suite suite, const std::vector<CorpusCase>& cases, bool parallel,
                      const std::function<void(const CorpusCase&, std::size_t, CaseLog&)>& work) {
  std::vector<CaseOutcome> outcomes(cases.size());
  auto one = [&](std::size_t i) {
    CaseLog log(cases[i]);
    try {
      work(cases[i], i, log);
    } catch (const std::exception& e) {
      log.fail({}, {}, e.what());
    }
    outcomes[i] = log.take();
  };
  const auto count = static_cast<long long>(cases.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) one(static_cast<std::size_t>(i));
  } else {
    for (long long i = 0; i < count; ++i) one(static_cast<std::size_t>(i));
  }
  SuiteResult r{suite, cases.size(), 0, {}};
  for (auto& o : outcomes) {
    r.checks += o.checks;
    r.mismatches.insert(r.mismatches.end(), o.mismatches.begin(), o.mismatches.end());
  }
  std::sort(r.mismatches.begin(), r.mismatches.end());
  return r;
}

/// Smallest exponent where two polynomials disagree.
RootVector first_difference(const LaurentPoly& x, const LaurentPoly& y) {
  std::set<Exponent> keys;
  for (const auto& [e, c] : x.terms()) keys.insert(e);
  for (const auto& [e, c] : y.terms()) keys.insert(e);
  for (const auto& e : keys)
    if (x.coefficient(e) != y.coefficient(e)) return e;
  return {};
}

bool is_power_of_two(Coeff c) { return c > 0 && (c & (c - 1)) == 0; }

}  // namespace

SuiteResult verify_formulas(const VerifyOptions& opt) {
  const auto cases = orientation_corpus(opt.max_rank);
  return run_cases(Suite::Formulas, cases, opt.parallel, [](const CorpusCase& c, std::size_t, CaseLog& log) {
    const ClusterTable table = enumerate_finite_type(c.matrix);
    const Quiver q = quiver_of(c.matrix);
    const auto roots = positive_roots(c.type);
    log.check(table.size() == roots.size(), {}, {}, "oracle found " + std::to_string(table.size()) + " variables");
    for (const auto& d : roots) {
      const auto it = table.find(d);
      if (it == table.end()) {
        log.fail(d, {}, "oracle has no variable");
        continue;
      }
      const LaurentPoly f = f_polynomial_closed(c.matrix, c.type, d);
      if (f != it->second.f) {
        const RootVector e = first_difference(f, it->second.f);
        log.fail(d, e,
                 "closed coefficient " + std::to_string(f.coefficient(e)) + " vs oracle " +
                     std::to_string(it->second.f.coefficient(e)));
      } else {
        log.check(true, d, {}, "");
      }
      const RootVector g = g_vector_closed(c.matrix, c.type, d);
      log.check(g == it->second.g, d, {}, "closed g " + to_string(g) + " vs oracle " + to_string(it->second.g));

      for (const auto& [e, coeff] : f.terms())
        log.check(is_power_of_two(coeff), d, e, "coefficient " + std::to_string(coeff) + " is not a power of 2");
      log.check(f.constant_term() == 1 && f.coefficient(d) == 1, d, d, "constant or top coefficient differs from 1");
      // Critical arrows are acceptable over the whole box.
      for (const auto& [e, coeff] : it->second.f.terms())
        for (const auto& a : q.arrows)
          if (is_critical(d, e, a)) log.check(is_acceptable(d, e, a), d, e, "critical arrow is not acceptable");
    }
  });
}

SuiteResult verify_quantum(const VerifyOptions& opt) {
  const auto cases = orientation_corpus(opt.max_rank);
  const auto scales = opt.d_scales;
  return run_cases(Suite::Quantum, cases, opt.parallel, [scales](const CorpusCase& c, std::size_t, CaseLog& log) {
    const std::size_t n = c.type.rank;
    for (const auto& d : positive_roots(c.type)) {
      const LaurentPoly f = f_polynomial_closed(c.matrix, c.type, d);
      const RootVector g = g_vector_closed(c.matrix, c.type, d);
      for (int s : scales) {
        const SkewSymmetrizer dh = scaled_symmetrizer(c.type, s);
        const QuantumTorusElement qf = quantum_f_polynomial_closed(c.matrix, c.type, s, d);
        const LaurentPoly at_one = qt_specialize_classical(qf);
        log.check(at_one == f, d, first_difference(at_one, f), "q=1 specialization differs at d_scale " + std::to_string(s));
        log.check(check_bar_symmetry(qf, g, dh), d, {}, "bar symmetry fails at d_scale " + std::to_string(s));
        const auto k = std::find(d.begin(), d.end(), 1) - d.begin();
        if (std::count(d.begin(), d.end(), 0) == static_cast<long>(n - 1)) {
          QuantumTorusElement base = QuantumTorusElement::one(qf.algebra());
          base.add_term(unit_vector(n, static_cast<std::size_t>(k)),
                        QCoefficient::v_power(dh.delta_hat[static_cast<std::size_t>(k)]));
          log.check(qf == base, d, {}, "simple root does not give q^(delta_k/2) Z_k + 1");
        }
      }
    }
  });
}

SuiteResult verify_folding_suite(const VerifyOptions& opt) {
  const auto cases = orientation_corpus(opt.max_rank, "BC");
  const std::size_t steps = opt.orbit_sequence_steps;
  return run_cases(Suite::Folding, cases, opt.parallel, [steps](const CorpusCase& c, std::size_t, CaseLog& log) {
    const Unfolding u = unfold(c.matrix);
    const FoldingReport rep = verify_folding(c.matrix, enumerate_finite_type(c.matrix), u, enumerate_finite_type(u.matrix));
    log.check(rep.round_trip, {}, {}, "quotient of the unfolding differs");
    for (const auto& r : rep.roots) {
      log.check(r.f_match, r.dbar, r.dprime, "projected F differs for unfolded root " + to_string(r.dprime));
      log.check(r.g_match, r.dbar, r.dprime, "quotient g differs for unfolded root " + to_string(r.dprime));
    }
    log.check(check_orbit_sequence(u, steps) == steps, {}, {}, "orbit sequence stopped early");
  });
}

SuiteResult verify_polygon(const VerifyOptions& opt) {
  std::vector<CorpusCase> cases;
  for (auto& c : orientation_corpus(opt.max_rank, "BC")) cases.push_back(std::move(c));
  const VerifyOptions o = opt;
  return run_cases(Suite::Polygon, cases, opt.parallel, [o](const CorpusCase& c, std::size_t idx, CaseLog& log) {
    const std::size_t n = c.type.rank;
    const DiagonalSet snake = initial_snake(c.matrix);
    log.check(is_maximal(snake) && snake.diagonals().size() == 2 * n - 1, {}, {}, "snake is not maximal");
    log.check(exchange_matrix_of(snake) == c.matrix, {}, {}, "snake does not encode the initial matrix");

    // Non-snake orbits biject onto the positive roots.
    std::set<RootVector> seen;
    std::size_t others = 0;
    for (const auto& o2 : all_orbits(snake.polygon())) {
      bool initial = false;
      for (const auto& a : snake.orbits) initial = initial || a == o2;
      if (initial) continue;
      ++others;
      seen.insert(denominator_of_orbit(o2, snake, c.type));
    }
    const auto roots = positive_roots(c.type);
    log.check(others == roots.size() && seen == std::set<RootVector>(roots.begin(), roots.end()), {}, {},
              "orbit denominators do not match the positive roots");

    std::mt19937 rng(o.rng_seed + static_cast<std::uint32_t>(idx) * 7919u);
    std::uniform_int_distribution<std::size_t> length(1, o.polygon_max_length);
    std::uniform_int_distribution<std::size_t> direction(0, n - 1);
    for (std::size_t s = 0; s < o.polygon_sequences; ++s) {
      std::vector<std::size_t> seq(length(rng));
      for (auto& k : seq) k = direction(rng);
      const auto m = polygon_agreement(c.matrix, seq);
      RootVector shown;
      for (std::size_t k : seq) shown.push_back(static_cast<int>(k + 1));
      log.check(!m, {}, shown, m ? *m : "");
    }
  });
}

bool VerifyReport::ok() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok(); });
}

const Mismatch* VerifyReport::counterexample() const {
  const Mismatch* best = nullptr;
  for (const auto& s : suites)
    if (!s.mismatches.empty() && (!best || s.mismatches.front() < *best)) best = &s.mismatches.front();
  return best;
}

VerifyReport run_verify(const std::vector<Suite>& suites, const VerifyOptions& opt) {
  VerifyReport r;
  for (Suite s : suites) {
    switch (s) {
      case Suite::Formulas: r.suites.push_back(verify_formulas(opt)); break;
      case Suite::Quantum: r.suites.push_back(verify_quantum(opt)); break;
      case Suite::Folding: r.suites.push_back(verify_folding_suite(opt)); break;
      case Suite::Polygon: r.suites.push_back(verify_polygon(opt)); break;
    }
  }
  return r;
}

namespace {

Json mismatch_to_json(const Mismatch& m) {
  return {{"type", m.type}, {"rank", m.rank},     {"orientation", m.orientation}, {"arrows", m.arrows},
          {"d", m.d},       {"e", m.e},           {"detail", m.detail}};
}

}  // namespace

Json verify_report_to_json(const VerifyReport& r) {
  Json suites = Json::array();
  for (const auto& s : r.suites) {
    Json ms = Json::array();
    for (const auto& m : s.mismatches) ms.push_back(mismatch_to_json(m));
    suites.push_back({{"suite", suite_name(s.suite)},
                      {"cases", s.cases},
                      {"checks", s.checks},
                      {"ok", s.ok()},
                      {"mismatches", std::move(ms)}});
  }
  const Mismatch* c = r.counterexample();
  return {{"ok", r.ok()}, {"suites", std::move(suites)}, {"counterexample", c ? mismatch_to_json(*c) : Json(nullptr)}};
}

}  // namespace clusterf
