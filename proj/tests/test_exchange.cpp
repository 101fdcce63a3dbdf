#include <doctest.h>

#include "clusterf/corpus.hpp"
#include "clusterf/error.hpp"
#include "clusterf/exchange.hpp"

using namespace clusterf;

namespace {

const IntMatrix kB4{{0, -1, 0, 0}, {1, 0, 1, 0}, {0, -1, 0, -1}, {0, 0, 2, 0}};
const IntMatrix kA2{{0, -1}, {1, 0}};

// Entry rule written out independently of the library.
IntMatrix naive_mutation(const IntMatrix& b, std::size_t k) {
  IntMatrix out = b;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
      } else {
        const int prod = b(i, k) * b(k, j);
        const int s = b(i, k) > 0 ? 1 : (b(i, k) < 0 ? -1 : 0);
        out(i, j) = b(i, j) + s * (prod > 0 ? prod : 0);
      }
    }
  }
  return out;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("pos_part and signum") {
  CHECK(pos_part(3) == 3);
  CHECK(pos_part(-2) == 0);
  CHECK(pos_part(0) == 0);
  CHECK(signum(5) == 1);
  CHECK(signum(-5) == -1);
  CHECK(signum(0) == 0);
}

TEST_CASE("mutate_matrix examples") {
  CHECK(mutate_matrix(kA2, 0) == IntMatrix{{0, 1}, {-1, 0}});
  CHECK(mutate_matrix(kB4, 1) == IntMatrix{{0, 1, 0, 0}, {-1, 0, -1, 0}, {0, 1, 0, -1}, {0, 0, 2, 0}});
  CHECK(kind_of([] { (void)mutate_matrix(kA2, 2); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("mutation is involutive and matches the entry rule on the corpus") {
  for (const auto& c : orientation_corpus(5)) {
    const IntMatrix ext = principal_extension(c.matrix);
    for (std::size_t k = 0; k < c.matrix.cols(); ++k) {
      const IntMatrix once = mutate_matrix(ext, k);
      CHECK(once == naive_mutation(ext, k));
      CHECK(mutate_matrix(once, k) == ext);
    }
  }
}

TEST_CASE("skew_symmetrizer") {
  CHECK(skew_symmetrizer(kB4).delta_hat == std::vector<int>{2, 2, 2, 1});
  CHECK(skew_symmetrizer(kA2).delta_hat == std::vector<int>{1, 1});
  CHECK(kind_of([] { (void)skew_symmetrizer(IntMatrix{{0, 1}, {1, 0}}); }) == ErrorKind::NotSkewSymmetrizable);
}

TEST_CASE("symmetrizer survives every mutation") {
  for (const auto& c : orientation_corpus(5)) {
    const SkewSymmetrizer s = skew_symmetrizer(c.matrix);
    IntMatrix b = c.matrix;
    for (std::size_t step = 0; step < 3 * b.cols(); ++step) {
      b = mutate_matrix(b, (step * 7 + 3) % b.cols());
      CHECK(s.certifies(b));
      CHECK(skew_symmetrizer(b) == s);
    }
  }
}

TEST_CASE("quiver_of and is_acyclic") {
  const Quiver q = quiver_of(kB4);
  REQUIRE(q.arrows.size() == 3);
  CHECK(q.has_arrow(0, 1));
  CHECK(q.has_arrow(2, 1));
  CHECK(q.has_arrow(2, 3));
  CHECK_FALSE(q.has_arrow(3, 2));
  for (const auto& a : q.arrows)
    if (a.from == 2 && a.to == 3) CHECK(a.weight == 2);
  CHECK(is_acyclic(q));

  CHECK(quiver_of(IntMatrix(2, 2)).arrows.empty());
  const Quiver single = quiver_of(kA2);
  REQUIRE(single.arrows.size() == 1);
  CHECK(single.arrows[0] == Arrow{0, 1, 1});

  const IntMatrix cycle{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}};
  CHECK_FALSE(is_acyclic(quiver_of(cycle)));
  CHECK(is_acyclic(Quiver{}));
}

TEST_CASE("classify_cartan_type") {
  const Classification b4 = classify_cartan_type(kB4);
  CHECK(b4.type == CartanType{CartanFamily::B, 4});
  CHECK(b4.is_identity());
  CHECK(classify_cartan_type(kA2).type == CartanType{CartanFamily::A, 2});
  CHECK(kind_of([] { (void)classify_cartan_type(IntMatrix{{0, 2}, {-2, 0}}); }) == ErrorKind::NotClassicalType);
  const IntMatrix cycle{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}};
  CHECK(kind_of([&] { (void)classify_cartan_type(cycle); }) == ErrorKind::NotAcyclic);
}

TEST_CASE("classification recovers the generating type, also after relabeling") {
  for (const auto& c : orientation_corpus(6)) {
    CAPTURE(c.type.name());
    CAPTURE(c.arrows());
    const Classification cl = classify_cartan_type(c.matrix);
    CHECK(cl.type == c.type);
    // Reverse the vertex order and classify again.
    const std::size_t n = c.matrix.cols();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = n - 1 - i;
    const IntMatrix shuffled = relabel(c.matrix, perm);
    const Classification back = classify_cartan_type(shuffled);
    // In rank 2 the reversal exchanges the long and short ends, so B2 and C2 swap.
    CartanType expected = c.type;
    if (n == 2 && c.type.family == CartanFamily::B) expected.family = CartanFamily::C;
    else if (n == 2 && c.type.family == CartanFamily::C) expected.family = CartanFamily::B;
    CHECK(back.type == expected);
    const IntMatrix canon = relabel(shuffled, back.relabeling);
    CHECK(classify_cartan_type(canon).is_identity());
  }
}

TEST_CASE("positive roots") {
  using R = std::vector<RootVector>;
  CHECK(positive_roots({CartanFamily::A, 2}) == R{{0, 1}, {1, 0}, {1, 1}});
  CHECK(positive_roots({CartanFamily::B, 2}) == R{{0, 1}, {1, 0}, {1, 1}, {1, 2}});
  CHECK(positive_roots({CartanFamily::B, 4}).size() == 16);
  for (std::size_t n = 1; n <= 7; ++n) {
    CHECK(positive_roots({CartanFamily::A, n}).size() == n * (n + 1) / 2);
    if (n >= 2) {
      CHECK(positive_roots({CartanFamily::B, n}).size() == n * n);
      CHECK(positive_roots({CartanFamily::C, n}).size() == n * n);
    }
    if (n >= 4) CHECK(positive_roots({CartanFamily::D, n}).size() == n * (n - 1));
  }
  CHECK(is_positive_root({CartanFamily::B, 4}, {1, 2, 2, 2}));
  CHECK(is_positive_root({CartanFamily::B, 4}, {1, 1, 1, 0}));
  CHECK(is_positive_root({CartanFamily::B, 4}, {1, 1, 1, 1}));
  CHECK_FALSE(is_positive_root({CartanFamily::B, 4}, {1, 0, 1, 0}));
  CHECK_FALSE(is_positive_root({CartanFamily::C, 4}, {1, 2, 2, 2}));
}

TEST_CASE("principal_extension") {
  CHECK(principal_extension(IntMatrix{{0}}) == IntMatrix{{0}, {1}});
  CHECK(principal_extension(kA2) == IntMatrix{{0, -1}, {1, 0}, {1, 0}, {0, 1}});
  CHECK(principal_extension(kB4).principal_part() == kB4);
}

TEST_CASE("type vectors") {
  CHECK(type_vector({CartanFamily::A, 3}) == std::vector<int>{1, 1, 1});
  CHECK(type_vector({CartanFamily::B, 4}) == std::vector<int>{2, 2, 2, 1});
  CHECK(type_vector({CartanFamily::C, 3}) == std::vector<int>{1, 1, 2});
  CHECK(type_vector({CartanFamily::D, 4}) == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("matrix_from_arrows rejects incomplete arrow sets") {
  CHECK(matrix_from_arrows({CartanFamily::B, 4}, {{0, 1}, {2, 1}, {2, 3}}) == kB4);
  CHECK(kind_of([] { (void)matrix_from_arrows({CartanFamily::B, 4}, {{0, 1}, {2, 1}}); }) ==
        ErrorKind::InvalidInput);
}
