#include "clusterf/closed_form.hpp"

#include <algorithm>
#include <functional>
#include <memory>

#include "clusterf/error.hpp"

namespace clusterf {

namespace {

bool at(const RootVector& d, const RootVector& e, std::size_t i, int dv, int ev) { return d[i] == dv && e[i] == ev; }

/// Visits every e with 0 <= e <= d in lexicographic order.
void for_each_in_box(const RootVector& d, const std::function<void(const RootVector&)>& visit) {
  RootVector e(d.size(), 0);
  while (true) {
    visit(e);
    std::size_t i = d.size();
    while (true) {
      if (i == 0) return;
      --i;
      if (e[i] < d[i]) break;
      e[i] = 0;
    }
    ++e[i];
  }
}

}  // namespace

bool is_acceptable(const RootVector& d, const RootVector& e, const Arrow& arrow) {
  const std::size_t i = arrow.from, j = arrow.to;
  return e[i] - e[j] <= pos_part(d[i] - d[j]);
}

bool is_critical(const RootVector& d, const RootVector& e, const Arrow& arrow) {
  const std::size_t i = arrow.from, j = arrow.to;
  return (at(d, e, i, 2, 1) && at(d, e, j, 1, 0)) || (at(d, e, j, 2, 1) && at(d, e, i, 1, 1));
}

int CriticalStructure::component_of(std::size_t v) const {
  for (std::size_t c = 0; c < components.size(); ++c)
    if (std::find(components[c].begin(), components[c].end(), v) != components[c].end()) return static_cast<int>(c);
  return -1;
}

CriticalStructure critical_structure(const Quiver& q, const RootVector& d, const RootVector& e) {
  const std::size_t n = q.vertex_count;
  if (d.size() != n || e.size() != n) throw Error(ErrorKind::DimensionMismatch, "critical_structure");
  CriticalStructure s;
  std::vector<int> comp(n, -1);
  for (std::size_t i = 0; i < n; ++i)
    if (at(d, e, i, 2, 1)) s.vertices.push_back(i);
  for (std::size_t v : s.vertices) {
    if (comp[v] >= 0) continue;
    const int id = static_cast<int>(s.components.size());
    std::vector<std::size_t> members{v}, stack{v};
    comp[v] = id;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (const auto& a : q.arrows) {
        std::size_t y;
        if (a.from == x)
          y = a.to;
        else if (a.to == x)
          y = a.from;
        else
          continue;
        if (!at(d, e, y, 2, 1) || comp[y] >= 0) continue;
        comp[y] = id;
        members.push_back(y);
        stack.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    s.components.push_back(std::move(members));
  }
  s.nu.assign(s.components.size(), 0);
  for (const auto& a : q.arrows) {
    if (!is_critical(d, e, a)) continue;
    // One endpoint is in S; the other has d = 1 and is not.
    const int c = comp[a.from] >= 0 ? comp[a.from] : comp[a.to];
    if (c >= 0) ++s.nu[static_cast<std::size_t>(c)];
  }
  return s;
}

CoefficientDatum coefficient_datum(const Quiver& q, CartanType t, const RootVector& d, const RootVector& e) {
  const std::size_t n = d.size();
  CoefficientDatum out;
  if (e.size() != n) throw Error(ErrorKind::DimensionMismatch, "exponent length");
  for (std::size_t i = 0; i < n; ++i)
    if (e[i] < 0 || e[i] > d[i]) return out;
  for (const auto& a : q.arrows)
    if (!is_acceptable(d, e, a)) return out;
  const CriticalStructure s = critical_structure(q, d, e);
  for (int v : s.nu)
    if (v > 1) return out;

  if (t.family == CartanFamily::C && n >= 2) {
    const std::size_t last = n - 1, prev = n - 2;
    if (e[last] == 1 && d[prev] == 2 && q.has_arrow(last, prev) && e[prev] != 2) return out;
    if (e[prev] >= 1 && d[last] == 1 && q.has_arrow(prev, last) && e[last] != 1) return out;
  }
  // Type B: a component reaching the short end may not carry a critical arrow.
  // When the 2s start before n-1 this is the single component through n-1;
  // when only d[n-1] = 2 the component is {n-1} itself.
  if (t.family == CartanFamily::B && n >= 2) {
    const int c = s.component_of(n - 1);
    if (c >= 0 && s.nu[static_cast<std::size_t>(c)] > 0) return out;
  }

  out.nonzero = true;
  out.phi = static_cast<int>(std::count(s.nu.begin(), s.nu.end(), 0));
  out.rho = (t.family == CartanFamily::B && e[n - 1] == 1 && out.phi >= 1) ? 1 : 0;
  return out;
}

void require_root(const IntMatrix& b, CartanType t, const RootVector& d) {
  if (!b.is_square() || b.rows() != t.rank || d.size() != t.rank)
    throw Error(ErrorKind::DimensionMismatch, "matrix, type and root must share the rank");
  if (!is_positive_root(t, d)) throw Error(ErrorKind::RootNotInType, to_string(d) + " is not a positive root of " + t.name());
}

Coeff classical_coefficient(const IntMatrix& b, CartanType t, const RootVector& d, const RootVector& e) {
  require_root(b, t, d);
  const CoefficientDatum c = coefficient_datum(quiver_of(b), t, d, e);
  return c.nonzero ? Coeff{1} << c.phi : 0;
}

LaurentPoly f_polynomial_closed(const IntMatrix& b, CartanType t, const RootVector& d) {
  require_root(b, t, d);
  const Quiver q = quiver_of(b);
  LaurentPoly f(t.rank);
  for_each_in_box(d, [&](const RootVector& e) {
    const CoefficientDatum c = coefficient_datum(q, t, d, e);
    if (c.nonzero) f.add_term(e, Coeff{1} << c.phi);
  });
  return f;
}

RootVector g_vector_closed(const IntMatrix& b, CartanType t, const RootVector& d) {
  require_root(b, t, d);
  const std::size_t n = t.rank;
  RootVector g(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    g[j] -= d[j];
    for (std::size_t i = 0; i < n; ++i) g[j] += d[i] * pos_part(-b(j, i));
  }
  return g;
}

RootVector g_vector_closed(const IntMatrix& b, const RootVector& d) {
  const Classification cls = classify_cartan_type(b);
  if (!cls.is_identity()) throw Error(ErrorKind::InvalidInput, "matrix is not canonically labeled");
  return g_vector_closed(b, cls.type, d);
}

SkewSymmetrizer scaled_symmetrizer(CartanType t, int d_scale) {
  if (d_scale < 1) throw Error(ErrorKind::InvalidInput, "d_scale must be at least 1");
  SkewSymmetrizer s{type_vector(t)};
  for (int& x : s.delta_hat) x *= d_scale;
  return s;
}

namespace {

QCoefficient coefficient_from_datum(const CoefficientDatum& c, CartanType t, int d_scale, const RootVector& g,
                                    const RootVector& a) {
  if (!c.nonzero) return {};
  const int dot = triple_dot(type_vector(t), g, a);
  QCoefficient out = QCoefficient::v_power(-d_scale * dot);
  if (t.family == CartanFamily::B) {
    out = out * QCoefficient::symmetric_pair(d_scale).pow(static_cast<unsigned>(c.rho));
    out = out * QCoefficient::symmetric_pair(2 * d_scale).pow(static_cast<unsigned>(c.phi - c.rho));
  } else {
    out = out * QCoefficient::symmetric_pair(d_scale).pow(static_cast<unsigned>(c.phi));
  }
  return out;
}

}  // namespace

QCoefficient quantum_coefficient(const IntMatrix& b, CartanType t, int d_scale, const RootVector& d,
                                 const RootVector& a) {
  if (d_scale < 1) throw Error(ErrorKind::InvalidInput, "d_scale must be at least 1");
  const RootVector g = g_vector_closed(b, t, d);
  return coefficient_from_datum(coefficient_datum(quiver_of(b), t, d, a), t, d_scale, g, a);
}

QuantumTorusElement quantum_f_polynomial_closed(const IntMatrix& b, CartanType t, int d_scale, const RootVector& d) {
  const RootVector g = g_vector_closed(b, t, d);
  auto algebra = std::make_shared<const SkewPairing>(b, scaled_symmetrizer(t, d_scale));
  const Quiver q = quiver_of(b);
  QuantumTorusElement f(algebra);
  for_each_in_box(d, [&](const RootVector& a) {
    f.add_term(a, coefficient_from_datum(coefficient_datum(q, t, d, a), t, d_scale, g, a));
  });
  return f;
}

bool check_bar_symmetry(const QuantumTorusElement& f, const RootVector& g, const SkewSymmetrizer& delta_hat) {
  for (const auto& [a, p] : f.terms()) {
    const int shift = -2 * triple_dot(g, a, delta_hat.delta_hat);
    if (!(p == qc_bar(p).shifted(shift))) return false;
  }
  return true;
}

}  // namespace clusterf
