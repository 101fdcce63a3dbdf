// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>

#include "clusterf/closed_form.hpp"
#include "clusterf/corpus.hpp"
#include "clusterf/oracle.hpp"
#include "clusterf/verify.hpp"
#include "support.hpp"

using namespace clusterf;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string note;

  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string describe(const SuiteResult& r) {
  std::string s = std::to_string(r.cases) + " cases, " + std::to_string(r.checks) + " checks";
  if (!r.ok()) {
    const Mismatch& m = r.mismatches.front();
    s += "; first mismatch " + m.type + std::to_string(m.rank) + " [" + m.arrows + "] d=" + to_string(m.d) + ": " +
         m.detail;
  }
  return s;
}

const CartanType kB4Type{CartanFamily::B, 4};

Outcome golden_classical() {
  Outcome out;
  const auto t0 = Clock::now();
  for (const auto& g : testdata::b4_classical()) {
    if (f_polynomial_closed(testdata::kB4, kB4Type, g.d) != testdata::to_poly(g)) out.fail("F mismatch at " + to_string(g.d));
    if (g_vector_closed(testdata::kB4, kB4Type, g.d) != g.g) out.fail("g mismatch at " + to_string(g.d));
  }
  const double secs = seconds_since(t0);
  // The quantum tables at q = 1 must agree with the classical ones.
  for (const auto& q : testdata::b4_quantum()) {
    LaurentPoly p(q.d.size());
    for (const auto& [a, powers] : q.terms) p.add_term(a, static_cast<Coeff>(powers.size()));
    for (const auto& c : testdata::b4_classical())
      if (c.d == q.d && testdata::to_poly(c) != p) out.fail("classical and quantum tables disagree at " + to_string(q.d));
  }
  if (secs >= 1.0) out.fail("took " + std::to_string(secs) + " s");
  if (out.ok) out.note = "5 F-polynomials and g-vectors exact in " + std::to_string(secs) + " s";
  return out;
}

Outcome golden_quantum() {
  Outcome out;
  const auto t0 = Clock::now();
  for (const auto& g : testdata::b4_quantum())
    if (testdata::to_terms(quantum_f_polynomial_closed(testdata::kB4, kB4Type, 2, g.d)) != testdata::to_terms(g))
      out.fail("quantum F mismatch at " + to_string(g.d));
  const double secs = seconds_since(t0);
  if (secs >= 1.0) out.fail("took " + std::to_string(secs) + " s");
  if (out.ok) out.note = "5 quantum F-polynomials exact in " + std::to_string(secs) + " s";
  return out;
}

Outcome suite(const std::function<SuiteResult(const VerifyOptions&)>& run, const VerifyOptions& opt) {
  Outcome out;
  const auto t0 = Clock::now();
  const SuiteResult r = run(opt);
  if (!r.ok()) out.fail(describe(r));
  if (r.cases == 0) out.fail("no cases ran");
  if (out.ok) out.note = describe(r) + " in " + std::to_string(seconds_since(t0)) + " s";
  return out;
}

Outcome enumeration_counts() {
  Outcome out;
  const std::vector<std::pair<CartanType, std::size_t>> expected{
      {{CartanFamily::A, 5}, 15}, {{CartanFamily::B, 5}, 25}, {{CartanFamily::C, 5}, 25},
      {{CartanFamily::D, 4}, 12}, {{CartanFamily::D, 5}, 20}};
  std::size_t tables = 0;
  for (const auto& c : orientation_corpus(5)) {
    for (const auto& [type, count] : expected) {
      if (c.type != type) continue;
      ++tables;
      try {
        const ClusterTable t = enumerate_finite_type(c.matrix);
        if (t.size() != count)
          out.fail(type.name() + " [" + c.arrows() + "] gave " + std::to_string(t.size()) + " variables");
        for (const auto& [d, rec] : t)
          if (!rec.variable.all_coefficients_positive() || !rec.f.all_coefficients_positive())
            out.fail("negative coefficient in " + type.name() + " at " + to_string(d));
      } catch (const std::exception& e) {
        out.fail(type.name() + " [" + c.arrows() + "]: " + e.what());
      }
    }
  }
  if (out.ok) out.note = std::to_string(tables) + " orientations enumerated with the expected counts";
  return out;
}

Outcome torus_algebra() {
  Outcome out;
  std::size_t pairs = 0;
  // One orientation per type suffices: the form only depends on B and the symmetrizer.
  for (const auto& oc : orientation_corpus(4)) {
    if (oc.orientation != 0) continue;
    const CartanType type = oc.type;
    const IntMatrix& b = oc.matrix;
    const SkewSymmetrizer dh = scaled_symmetrizer(type, 1);
    const SkewPairing lam(b, dh);
    const std::size_t n = type.rank;
    std::size_t total = 1;
    for (std::size_t i = 0; i < 2 * n; ++i) total *= 5;
    for (std::size_t code = 0; code < total; ++code) {
      RootVector a(n), c(n);
      std::size_t x = code;
      for (std::size_t i = 0; i < n; ++i, x /= 5) a[i] = static_cast<int>(x % 5) - 2;
      for (std::size_t i = 0; i < n; ++i, x /= 5) c[i] = static_cast<int>(x % 5) - 2;
      ++pairs;
      if (qt_monomial_mul(a, c, lam).v_power != testdata::reorder_v_power(a, c, b, dh.delta_hat))
        out.fail(type.name() + " product " + to_string(a) + " * " + to_string(c));
    }
  }

  const auto alg = std::make_shared<const SkewPairing>(testdata::kB4, scaled_symmetrizer(kB4Type, 2));
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> ex(-2, 2), vex(-4, 4), co(-3, 3), len(1, 4);
  auto element = [&] {
    QuantumTorusElement x(alg);
    for (int t = len(rng); t > 0; --t) {
      RootVector a(4);
      for (auto& v : a) v = ex(rng);
      x.add_term(a, QCoefficient::v_power(vex(rng), co(rng)));
    }
    return x;
  };
  for (int t = 0; t < 300; ++t) {
    const auto x = element(), y = element(), z = element();
    if (qt_mul(x, qt_mul(y, z)) != qt_mul(qt_mul(x, y), z)) out.fail("associativity");
    RootVector a(4), b(4);
    for (auto& v : a) v = ex(rng);
    for (auto& v : b) v = ex(rng);
    const auto za = QuantumTorusElement::monomial(alg, a), zb = QuantumTorusElement::monomial(alg, b);
    // q^(2 theta(a,b)) is v^(2 a^T Lambda b).
    if (qt_mul(za, zb) != qt_mul(zb, za).scaled(2 * alg->form(a, b))) out.fail("commutation");
  }
  if (out.ok) out.note = std::to_string(pairs) + " monomial products match the reordering oracle";
  return out;
}

}  // namespace

int main() {
  VerifyOptions rank5;
  rank5.max_rank = 5;
  VerifyOptions rank4;
  rank4.max_rank = 4;
  rank4.polygon_sequences = 100;
  rank4.polygon_max_length = 20;

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"golden classical F-polynomials and g-vectors", golden_classical},
      {"golden quantum F-polynomials", golden_quantum},
      {"closed formulas equal the oracle up to rank 5", [&] { return suite(verify_formulas, rank5); }},
      {"enumeration counts", enumeration_counts},
      {"quantum specialization and bar symmetry up to rank 5", [&] { return suite(verify_quantum, rank5); }},
      {"folding up to rank 4", [&] { return suite(verify_folding_suite, rank4); }},
      {"polygon model up to rank 4", [&] { return suite(verify_polygon, rank4); }},
      {"quantum torus algebra", torus_algebra},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.ok) ++failures;
    std::printf("%s %zu %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.note.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
