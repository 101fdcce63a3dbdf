#include <doctest.h>

#include <algorithm>

#include "clusterf/corpus.hpp"
#include "clusterf/error.hpp"
#include "clusterf/oracle.hpp"
#include "support.hpp"

using namespace clusterf;

namespace {

LaurentPoly var(std::size_t n, std::size_t i) { return LaurentPoly::variable(n, i); }
LaurentPoly one(std::size_t n) { return LaurentPoly::constant(n, 1); }
const IntMatrix kA2{{0, -1}, {1, 0}};

}  // namespace

TEST_CASE("initial seeds") {
  const Seed s1 = initial_seed(IntMatrix{{0}});
  REQUIRE(s1.rank() == 1);
  CHECK(s1.cluster[0] == var(2, 0));
  CHECK(s1.matrix == IntMatrix{{0}, {1}});

  CHECK(initial_seed(kA2).matrix == IntMatrix{{0, -1}, {1, 0}, {1, 0}, {0, 1}});
  const Seed b4 = initial_seed(testdata::kB4);
  CHECK(b4.matrix.rows() == 8);
  CHECK(b4.matrix.principal_part() == testdata::kB4);
}

TEST_CASE("single mutations") {
  const Seed s1 = mutate_seed(initial_seed(IntMatrix{{0}}), 0);
  CHECK(s1.cluster[0] == lp_div_exact(var(2, 1) + one(2), var(2, 0)));

  const Seed a = mutate_seed(initial_seed(kA2), 0);
  const LaurentPoly x = a.cluster[0];
  CHECK(x == lp_div_exact(var(4, 1) * var(4, 2) + one(4), var(4, 0)));
  CHECK(extract_f_polynomial(x) == var(2, 0) + one(2));
  CHECK(extract_g_vector(x) == RootVector{-1, 0});
  CHECK(extract_denominator(x) == RootVector{1, 0});
}

TEST_CASE("initial variables") {
  const Seed s = initial_seed(testdata::kB4);
  for (std::size_t l = 0; l < 4; ++l) {
    CHECK(extract_f_polynomial(s.cluster[l]) == one(4));
    CHECK(extract_g_vector(s.cluster[l]) == unit_vector(4, l));
    RootVector minus(4, 0);
    minus[l] = -1;
    CHECK(extract_denominator(s.cluster[l]) == minus);
  }
}

TEST_CASE("seed mutation is involutive") {
  for (const auto& c : orientation_corpus(4)) {
    const Seed s0 = initial_seed(c.matrix);
    Seed s = s0;
    for (std::size_t step = 0; step < 4; ++step) {
      const std::size_t k = (step * 3 + 1) % c.matrix.cols();
      const Seed t = mutate_seed(s, k);
      CHECK(mutate_seed(t, k) == s);
      s = t;
    }
  }
}

TEST_CASE("extraction errors") {
  LaurentPoly neg(4);
  neg.add_term({0, 0, -1, 0}, 1);
  CHECK_THROWS_AS(extract_f_polynomial(neg), Error);
  LaurentPoly no_const(4);
  no_const.add_term({0, 0, 1, 0}, 1);
  CHECK_THROWS_AS(extract_f_polynomial(no_const), Error);
  CHECK_THROWS_AS(extract_g_vector(no_const), Error);
}

TEST_CASE("enumeration of small types") {
  const ClusterTable a2 = enumerate_finite_type(kA2);
  REQUIRE(a2.size() == 3);
  CHECK(a2.count({1, 0}) == 1);
  CHECK(a2.count({0, 1}) == 1);
  CHECK(a2.count({1, 1}) == 1);

  const ClusterTable a1 = enumerate_finite_type(IntMatrix{{0}});
  REQUIRE(a1.size() == 1);
  const ClusterRecord& r = a1.at({1});
  CHECK(r.f == LaurentPoly::variable(1, 0) + LaurentPoly::constant(1, 1));
  CHECK(r.g == RootVector{-1});
}

TEST_CASE("B4 worked example from the oracle") {
  const ClusterTable t = enumerate_finite_type(testdata::kB4);
  CHECK(t.size() == 16);
  for (const auto& g : testdata::b4_classical()) {
    CAPTURE(to_string(g.d));
    REQUIRE(t.count(g.d) == 1);
    CHECK(t.at(g.d).f == testdata::to_poly(g));
    CHECK(t.at(g.d).g == g.g);
    CHECK(extract_denominator(t.at(g.d).variable) == g.d);
  }
  CHECK(t.at({0, 1, 1, 0}).f.to_string() == "u2*u3 + u2 + 1");
}

TEST_CASE("enumerated tables satisfy the structural invariants") {
  for (const auto& c : orientation_corpus(4)) {
    CAPTURE(c.type.name());
    CAPTURE(c.arrows());
    EnumerationStats stats;
    const ClusterTable t = enumerate_finite_type(c.matrix, 10000, &stats);
    const auto roots = positive_roots(c.type);
    CHECK(t.size() == roots.size());
    CHECK(stats.seeds > 0);
    for (const auto& d : roots) {
      REQUIRE(t.count(d) == 1);
      const ClusterRecord& r = t.at(d);
      CHECK(r.f.constant_term() == 1);
      CHECK(r.f.all_coefficients_positive());
      CHECK(r.variable.all_coefficients_positive());
      // Primitive: no variable divides every term.
      const Exponent lo = r.f.min_exponents();
      for (int x : lo) CHECK(x == 0);
      CHECK(reconstruct_variable(r.f, r.g, c.matrix) == r.variable);
      // The witness path reproduces the variable.
      Seed s = initial_seed(c.matrix);
      for (std::size_t k : r.path) s = mutate_seed(s, k);
      CHECK(std::find(s.cluster.begin(), s.cluster.end(), r.variable) != s.cluster.end());
    }
  }
}

TEST_CASE("cap is enforced") {
  CHECK_THROWS_AS(enumerate_finite_type(testdata::kB4, 3), Error);
}
