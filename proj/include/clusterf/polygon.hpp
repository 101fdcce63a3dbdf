#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clusterf/exchange.hpp"

namespace clusterf {

/// Chord of the regular (2n+2)-gon with vertices 0..2n+1 counterclockwise,
/// stored with a < b.
struct Diagonal {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

/// The (2n+2)-gon with its half-turn theta(v) = v + n + 1.
class Polygon {
 public:
  explicit Polygon(std::size_t n);

  std::size_t rank() const noexcept { return n_; }
  int vertex_count() const noexcept { return static_cast<int>(2 * n_ + 2); }
  int wrap(int v) const;
  int theta(int v) const { return wrap(v + static_cast<int>(n_) + 1); }
  Diagonal theta(const Diagonal& d) const { return make(theta(d.a), theta(d.b)); }

  bool is_side(int u, int v) const;
  bool is_diagonal(int u, int v) const;
  bool is_diameter(const Diagonal& d) const { return theta(d.a) == d.b; }
  /// Normalized diagonal; throws InvalidInput for sides or repeated vertices.
  Diagonal make(int u, int v) const;

  std::vector<Diagonal> all_diagonals() const;

 private:
  std::size_t n_;
};

/// Endpoints strictly interleave and no endpoint is shared.
bool crosses(const Diagonal& x, const Diagonal& y);

/// {d, theta(d)}, sorted; a single element for diameters.
using DiagonalOrbit = std::vector<Diagonal>;

DiagonalOrbit orbit_of(const Polygon& p, const Diagonal& d);

/// All theta-orbits in lexicographic order.
std::vector<DiagonalOrbit> all_orbits(const Polygon& p);

/// Maximal diagonal set with its orbits labeled by cluster position.
struct DiagonalSet {
  std::size_t n = 0;
  CartanFamily type = CartanFamily::B;
  std::vector<DiagonalOrbit> orbits;

  Polygon polygon() const { return Polygon(n); }
  std::vector<Diagonal> diagonals() const;
  /// Position of the orbit containing d, if any.
  std::optional<std::size_t> position_of(const Diagonal& d) const;
};

/// Pairwise non-crossing, theta-closed, and no diagonal can be added.
bool is_maximal(const DiagonalSet& s);

/// alpha_1 = [0,2]; each alpha_{i+1} turns clockwise from alpha_i iff i -> i+1.
/// Throws WrongType unless b is canonically labeled of type B or C.
DiagonalSet initial_snake(const IntMatrix& b);

/// Type B: d_i counts crossings of alpha_i with {beta, theta beta}.
/// Type C: d_i counts crossings of beta with {alpha_i, theta alpha_i}.
/// Throws NotARoot when the result is not a positive root.
RootVector denominator_of_orbit(const DiagonalOrbit& o, const DiagonalSet& snake, CartanType t);

struct Quadrilateral {
  int a, b, c, f;  // counterclockwise, with [ac] the flipped diagonal
};

/// Quadrilateral of s around d. Throws QuadrilateralNotFound.
Quadrilateral quadrilateral_of(const DiagonalSet& s, const Diagonal& d);

/// Replaces orbit k by the orbit of the other diagonal of its quadrilateral.
DiagonalSet flip(const DiagonalSet& s, std::size_t k);

/// Column k of the exchange matrix encoded by s.
std::vector<int> exchange_entries(const DiagonalSet& s, std::size_t k);

IntMatrix exchange_matrix_of(const DiagonalSet& s);

/// Follows the mutation sequence on both the polygon and the seed oracle and
/// returns a description of the first disagreement, if any.
std::optional<std::string> polygon_agreement(const IntMatrix& b, const std::vector<std::size_t>& sequence);

}  // namespace clusterf
