#pragma once

#include <cstddef>
#include <vector>

#include "clusterf/exchange.hpp"
#include "clusterf/laurent.hpp"
#include "clusterf/oracle.hpp"

namespace clusterf {

/// Group {id, sigma} for an involution sigma of [0, N). Orbits are ordered by
/// their smallest element.
class FoldingGroup {
 public:
  explicit FoldingGroup(std::vector<std::size_t> sigma);
  static FoldingGroup trivial(std::size_t n);

  std::size_t size() const noexcept { return sigma_.size(); }
  std::size_t order() const noexcept { return order_; }
  std::size_t sigma(std::size_t i) const { return sigma_.at(i); }
  /// sigma on [0, 2N): i + N maps to sigma(i) + N.
  std::size_t extended(std::size_t i) const;

  const std::vector<std::vector<std::size_t>>& orbits() const noexcept { return orbits_; }
  std::size_t orbit_count() const noexcept { return orbits_.size(); }
  std::size_t orbit_of(std::size_t i) const { return orbit_index_.at(i); }
  std::size_t stabilizer_size(std::size_t i) const;

 private:
  std::vector<std::size_t> sigma_;
  std::size_t order_ = 1;
  std::vector<std::vector<std::size_t>> orbits_;
  std::vector<std::size_t> orbit_index_;
};

/// True iff b(sigma~ i, sigma j) = b(i, j) for an N x N or 2N x N matrix.
bool is_invariant(const IntMatrix& b, const FoldingGroup& g);

/// bbar(I, J) = sum over l in I of b(l, j) for a representative j of J.
/// Accepts N x N (result r x r) and 2N x N (result 2r x r) matrices.
/// Throws NotInvariant.
IntMatrix quotient_matrix(const IntMatrix& b, const FoldingGroup& g);

struct Unfolding {
  IntMatrix matrix;
  FoldingGroup group;
  CartanType type;
};

/// C_n from A_{2n-1} with sigma(i) = 2n-2-i, or B_n from D_{n+1} with sigma
/// swapping the two leaves. Throws WrongType.
Unfolding unfold(const IntMatrix& bbar);

/// No nonzero entry between two principal indices in one orbit.
bool is_admissible(const IntMatrix& b, const FoldingGroup& g);

/// Admissible, and rows (resp. columns) of one orbit are weakly sign-coherent.
bool is_strongly_admissible(const IntMatrix& b, const FoldingGroup& g);

/// Mutations over an orbit in ascending order, checked against descending
/// order. Throws NotAdmissible.
IntMatrix orbit_mutation(const IntMatrix& b, const FoldingGroup& g, std::size_t orbit);
Seed orbit_mutation(const Seed& s, const FoldingGroup& g, std::size_t orbit);

/// u_i -> u_{orbit(i)}.
LaurentPoly project_polynomial(const LaurentPoly& f, const FoldingGroup& g);

/// The same projection on the 2N-variable ring x_1..x_N, y_1..y_N.
LaurentPoly project_seed_variable(const LaurentPoly& x, const FoldingGroup& g);

/// Orbit sums.
RootVector quotient_vector(const RootVector& v, const FoldingGroup& g);

struct FoldingRootReport {
  RootVector dbar;
  RootVector dprime;  // empty when no candidate exists
  bool f_match = false;
  bool g_match = false;
  std::size_t candidates = 0;
};

struct FoldingReport {
  CartanType type;
  IntMatrix matrix;
  CartanType unfolded_type;
  IntMatrix unfolded;
  bool round_trip = false;
  std::vector<FoldingRootReport> roots;

  bool ok() const;
};

/// Matches every root of bbar with an unfolded root of the same quotient and
/// compares projected F-polynomials and quotient g-vectors.
FoldingReport verify_folding(const IntMatrix& bbar, const ClusterTable& bar_table, const Unfolding& u,
                             const ClusterTable& table);
FoldingReport verify_folding(const IntMatrix& bbar);

/// Walks a deterministic sequence of sink/source orbit mutations from [B; I],
/// checking strong admissibility at each step and that projection commutes
/// with mutation for both matrices and cluster variables. Returns the number
/// of steps checked; throws NotAdmissible or ProjectionMismatch on failure.
std::size_t check_orbit_sequence(const Unfolding& u, std::size_t steps);

}  // namespace clusterf
