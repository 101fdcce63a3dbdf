#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "clusterf/exchange.hpp"
#include "clusterf/laurent.hpp"

namespace clusterf {

/// Labeled seed with principal coefficients. Cluster entries live in the
/// Laurent ring on x_1..x_n, y_1..y_n (variables 0..n-1 and n..2n-1).
struct Seed {
  std::vector<LaurentPoly> cluster;
  IntMatrix matrix;  // 2n x n

  std::size_t rank() const noexcept { return cluster.size(); }
  friend bool operator==(const Seed&, const Seed&) = default;
};

Seed initial_seed(const IntMatrix& b);

/// Exchange relation in direction k (0-based). Throws LaurentPhenomenonViolation
/// if the division is not exact.
Seed mutate_seed(const Seed& s, std::size_t k);

/// Set every x to 1 and rename y_j to u_j.
LaurentPoly extract_f_polynomial(const LaurentPoly& x);

/// x-exponent of the unique y-free term.
RootVector extract_g_vector(const LaurentPoly& x);

/// d_i = -(minimal exponent of x_i).
RootVector extract_denominator(const LaurentPoly& x);

/// y-hat_j = y_j * prod_i x_i^{b_ij}, as elements of the 2n-variable ring.
std::vector<LaurentPoly> y_hats(const IntMatrix& b);

/// F(y-hat) * x^g.
LaurentPoly reconstruct_variable(const LaurentPoly& f, const RootVector& g, const IntMatrix& b);

struct ClusterRecord {
  LaurentPoly variable;
  LaurentPoly f;
  RootVector g;
  std::vector<std::size_t> path;  // 0-based directions, shortest in BFS order
};

using ClusterTable = std::map<RootVector, ClusterRecord>;

struct EnumerationStats {
  std::size_t seeds = 0;
  std::size_t mutations = 0;
};

/// Breadth-first search over seeds from the initial seed, identifying seeds
/// that agree as multisets of cluster variables. Checks the key set against
/// the positive roots, positivity, constant term 1 and the F/g reconstruction.
ClusterTable enumerate_finite_type(const IntMatrix& b, std::size_t cap = 10000, EnumerationStats* stats = nullptr);

}  // namespace clusterf
