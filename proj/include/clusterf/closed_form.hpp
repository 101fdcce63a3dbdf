#pragma once

#include <cstddef>
#include <vector>

#include "clusterf/exchange.hpp"
#include "clusterf/laurent.hpp"
#include "clusterf/quantum.hpp"

namespace clusterf {

/// e_i - e_j <= [d_i - d_j]_+ for the arrow i -> j.
bool is_acceptable(const RootVector& d, const RootVector& e, const Arrow& arrow);

/// (d_i,e_i) = (2,1) and (d_j,e_j) = (1,0), or (d_j,e_j) = (2,1) and (d_i,e_i) = (1,1).
bool is_critical(const RootVector& d, const RootVector& e, const Arrow& arrow);

/// Induced subgraph on {i : (d_i, e_i) = (2,1)} with its components and the
/// number of critical arrows touching each component.
struct CriticalStructure {
  std::vector<std::size_t> vertices;
  std::vector<std::vector<std::size_t>> components;
  std::vector<int> nu;

  /// Index of the component holding v, or -1.
  int component_of(std::size_t v) const;
};

CriticalStructure critical_structure(const Quiver& q, const RootVector& d, const RootVector& e);

/// Combinatorial data behind one coefficient. When nonzero, the classical
/// coefficient is 2^phi.
struct CoefficientDatum {
  bool nonzero = false;
  int phi = 0;
  int rho = 0;
};

/// Evaluates the support conditions on canonically labeled input without
/// checking that d is a positive root.
CoefficientDatum coefficient_datum(const Quiver& q, CartanType t, const RootVector& d, const RootVector& e);

/// Throws RootNotInType unless d is a positive root of t, and InvalidInput
/// unless b is canonically labeled of type t.
void require_root(const IntMatrix& b, CartanType t, const RootVector& d);

Coeff classical_coefficient(const IntMatrix& b, CartanType t, const RootVector& d, const RootVector& e);

/// Sum of classical coefficients times u^e over the box 0 <= e <= d.
LaurentPoly f_polynomial_closed(const IntMatrix& b, CartanType t, const RootVector& d);

RootVector g_vector_closed(const IntMatrix& b, CartanType t, const RootVector& d);
/// Classifies b first; b must already be canonically labeled.
RootVector g_vector_closed(const IntMatrix& b, const RootVector& d);

/// delta_hat = d_scale * type vector.
SkewSymmetrizer scaled_symmetrizer(CartanType t, int d_scale);

QCoefficient quantum_coefficient(const IntMatrix& b, CartanType t, int d_scale, const RootVector& d,
                                 const RootVector& a);

QuantumTorusElement quantum_f_polynomial_closed(const IntMatrix& b, CartanType t, int d_scale, const RootVector& d);

/// P_a(v) = v^(-2 g.a.delta_hat) P_a(v^-1) for every coefficient.
bool check_bar_symmetry(const QuantumTorusElement& f, const RootVector& g, const SkewSymmetrizer& delta_hat);

}  // namespace clusterf
