#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "clusterf/matrix.hpp"

namespace clusterf {

/// Matrix mutation in direction k (0-based column). Works on any m x n matrix
/// with m >= n; the principal part follows the same rule as the frozen rows.
IntMatrix mutate_matrix(const IntMatrix& b, std::size_t k);

/// Top block B, bottom block I_n.
IntMatrix principal_extension(const IntMatrix& b);

/// Diagonal of a positive integer D with DB skew-symmetric, gcd-normalized on
/// every connected component of the underlying graph.
struct SkewSymmetrizer {
  std::vector<int> delta_hat;

  /// True iff delta_hat[i] * b(i,j) == -delta_hat[j] * b(j,i) for all i, j.
  bool certifies(const IntMatrix& b) const;
  friend bool operator==(const SkewSymmetrizer&, const SkewSymmetrizer&) = default;
};

SkewSymmetrizer skew_symmetrizer(const IntMatrix& b);

struct Arrow {
  std::size_t from;
  std::size_t to;
  int weight;  // b(to, from) > 0
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Arrow i -> j whenever b(j, i) > 0.
struct Quiver {
  std::size_t vertex_count = 0;
  std::vector<Arrow> arrows;

  bool has_arrow(std::size_t from, std::size_t to) const;
};

Quiver quiver_of(const IntMatrix& b);

bool is_acyclic(const Quiver& q);

enum class CartanFamily { A, B, C, D };

char family_letter(CartanFamily f);
CartanFamily family_from_letter(char c);

struct CartanType {
  CartanFamily family;
  std::size_t rank;

  std::string name() const;
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Canonical labels: A/B/C use the path 0-1-...-(n-1); D uses the path
/// 0-...-(n-3) with the fork at n-3 and leaves n-2, n-1. For B the short edge
/// has |b(n-2,n-1)| = 1 and |b(n-1,n-2)| = 2; for C the magnitudes swap.
struct Classification {
  CartanType type;
  /// relabeling[canonical] = original vertex index.
  std::vector<std::size_t> relabeling;

  bool is_identity() const;
};

Classification classify_cartan_type(const IntMatrix& b);

/// Conjugate b by a relabeling: result(i, j) = b(perm[i], perm[j]).
IntMatrix relabel(const IntMatrix& b, const std::vector<std::size_t>& perm);

/// Undirected edges of the canonical Dynkin diagram, each as (lower, higher).
std::vector<std::pair<std::size_t, std::size_t>> dynkin_edges(CartanType t);

/// Exchange matrix of type t whose quiver has exactly the given arrows
/// (one per diagram edge). Throws InvalidInput if the arrows do not orient
/// each diagram edge exactly once.
IntMatrix matrix_from_arrows(CartanType t, const std::vector<std::pair<std::size_t, std::size_t>>& arrows);

/// All 2^(n-1) orientations of the diagram. Bit e of the index reverses edge e
/// from its default lower -> higher direction.
std::vector<IntMatrix> all_orientations(CartanType t);

void validate_cartan_type(CartanType t);

/// Positive roots in lexicographic order.
std::vector<RootVector> positive_roots(CartanType t);

bool is_positive_root(CartanType t, const RootVector& d);

/// Per-type symmetrizer: all ones for A and D, (2,...,2,1) for B, (1,...,1,2) for C.
std::vector<int> type_vector(CartanType t);

}  // namespace clusterf
