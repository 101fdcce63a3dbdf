#include "clusterf/polygon.hpp"

#include <algorithm>
#include <set>

#include "clusterf/error.hpp"
#include "clusterf/oracle.hpp"

namespace clusterf {

Polygon::Polygon(std::size_t n) : n_(n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "polygon rank must be positive");
}

int Polygon::wrap(int v) const {
  const int m = vertex_count();
  return ((v % m) + m) % m;
}

bool Polygon::is_side(int u, int v) const {
  const int d = wrap(u - v);
  return d == 1 || d == vertex_count() - 1;
}

bool Polygon::is_diagonal(int u, int v) const { return wrap(u) != wrap(v) && !is_side(u, v); }

Diagonal Polygon::make(int u, int v) const {
  u = wrap(u);
  v = wrap(v);
  if (!is_diagonal(u, v))
    throw Error(ErrorKind::InvalidInput, "[" + std::to_string(u) + "," + std::to_string(v) + "] is not a diagonal");
  return u < v ? Diagonal{u, v} : Diagonal{v, u};
}

std::vector<Diagonal> Polygon::all_diagonals() const {
  std::vector<Diagonal> out;
  for (int u = 0; u < vertex_count(); ++u)
    for (int v = u + 1; v < vertex_count(); ++v)
      if (is_diagonal(u, v)) out.push_back({u, v});
  return out;
}

bool crosses(const Diagonal& x, const Diagonal& y) {
  if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b) return false;
  const bool ya_in = x.a < y.a && y.a < x.b;
  const bool yb_in = x.a < y.b && y.b < x.b;
  return ya_in != yb_in;
}

DiagonalOrbit orbit_of(const Polygon& p, const Diagonal& d) {
  DiagonalOrbit o{d};
  const Diagonal t = p.theta(d);
  if (t != d) o.push_back(t);
  std::sort(o.begin(), o.end());
  return o;
}

std::vector<DiagonalOrbit> all_orbits(const Polygon& p) {
  std::set<DiagonalOrbit> seen;
  for (const auto& d : p.all_diagonals()) seen.insert(orbit_of(p, d));
  return {seen.begin(), seen.end()};
}

std::vector<Diagonal> DiagonalSet::diagonals() const {
  std::vector<Diagonal> out;
  for (const auto& o : orbits) out.insert(out.end(), o.begin(), o.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> DiagonalSet::position_of(const Diagonal& d) const {
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (std::find(orbits[i].begin(), orbits[i].end(), d) != orbits[i].end()) return i;
  return std::nullopt;
}

bool is_maximal(const DiagonalSet& s) {
  const Polygon p = s.polygon();
  const auto ds = s.diagonals();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (!std::binary_search(ds.begin(), ds.end(), p.theta(ds[i]))) return false;
    for (std::size_t j = i + 1; j < ds.size(); ++j)
      if (ds[i] == ds[j] || crosses(ds[i], ds[j])) return false;
  }
  for (const auto& d : p.all_diagonals()) {
    if (std::binary_search(ds.begin(), ds.end(), d)) continue;
    if (std::none_of(ds.begin(), ds.end(), [&](const Diagonal& e) { return crosses(d, e); })) return false;
  }
  return true;
}

DiagonalSet initial_snake(const IntMatrix& b) {
  Classification cls;
  try {
    cls = classify_cartan_type(b);
  } catch (const Error& e) {
    throw Error(ErrorKind::WrongType, std::string("snake needs type B or C: ") + e.what());
  }
  const CartanFamily fam = cls.type.family;
  if ((fam != CartanFamily::B && fam != CartanFamily::C) || !cls.is_identity())
    throw Error(ErrorKind::WrongType, "snake needs a canonically labeled matrix of type B or C");
  const std::size_t n = cls.type.rank;
  const Polygon p(n);
  DiagonalSet s{n, fam, {}};
  // [lo, hi] with hi = lo + length counterclockwise.
  int lo = 0, hi = 2;
  for (std::size_t i = 0; i < n; ++i) {
    s.orbits.push_back(orbit_of(p, p.make(lo, hi)));
    if (i + 1 == n) break;
    if (b(i + 1, i) > 0)
      --lo;  // clockwise turn about hi
    else
      ++hi;  // counterclockwise turn about lo
  }
  if (!is_maximal(s)) throw Error(ErrorKind::InvalidInput, "snake is not a maximal diagonal set");
  return s;
}

RootVector denominator_of_orbit(const DiagonalOrbit& o, const DiagonalSet& snake, CartanType t) {
  const std::size_t n = snake.n;
  const Polygon p(n);
  RootVector d(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Diagonal alpha = snake.orbits[i].front();
    if (t.family == CartanFamily::B) {
      for (const auto& beta : o) d[i] += crosses(alpha, beta);
    } else {
      for (const auto& a : orbit_of(p, alpha)) d[i] += crosses(o.front(), a);
    }
  }
  if (!is_positive_root(t, d)) throw Error(ErrorKind::NotARoot, to_string(d) + " is not a positive root of " + t.name());
  return d;
}

Quadrilateral quadrilateral_of(const DiagonalSet& s, const Diagonal& d) {
  const Polygon p = s.polygon();
  const auto ds = s.diagonals();
  auto edge = [&](int u, int v) {
    return p.is_side(u, v) || std::binary_search(ds.begin(), ds.end(), p.make(u, v));
  };
  // Apex of the triangle on the arc strictly between from and to (counterclockwise).
  auto apex = [&](int from, int to) {
    for (int v = p.wrap(from + 1); v != to; v = p.wrap(v + 1))
      if (edge(from, v) && edge(v, to)) return v;
    throw Error(ErrorKind::QuadrilateralNotFound,
                "around [" + std::to_string(d.a) + "," + std::to_string(d.b) + "]");
  };
  return {d.a, apex(d.a, d.b), d.b, apex(d.b, d.a)};
}

DiagonalSet flip(const DiagonalSet& s, std::size_t k) {
  if (k >= s.orbits.size()) throw Error(ErrorKind::IndexOutOfRange, "flip position");
  const Polygon p = s.polygon();
  const Quadrilateral q = quadrilateral_of(s, s.orbits[k].front());
  DiagonalSet out = s;
  out.orbits[k] = orbit_of(p, p.make(q.b, q.f));
  return out;
}

std::vector<int> exchange_entries(const DiagonalSet& s, std::size_t k) {
  const std::size_t n = s.orbits.size();
  if (k >= n) throw Error(ErrorKind::IndexOutOfRange, "exchange column");
  const Polygon p = s.polygon();
  const int r = s.type == CartanFamily::B ? 1 : 2;
  const Quadrilateral q = quadrilateral_of(s, s.orbits[k].front());
  const bool k_diameter = s.orbits[k].size() == 1;
  std::vector<int> column(n, 0);
  auto mark = [&](int u, int v, int sign) {
    if (p.is_side(u, v)) return;
    const auto i = s.position_of(p.make(u, v));
    if (!i || *i == k) return;
    const bool i_diameter = s.orbits[*i].size() == 1;
    const int magnitude = i_diameter ? 2 / r : (k_diameter ? r : 1);
    column[*i] = sign * magnitude;
  };
  mark(q.c, q.f, +1);
  mark(q.a, q.b, +1);
  mark(q.b, q.c, -1);
  mark(q.a, q.f, -1);
  return column;
}

IntMatrix exchange_matrix_of(const DiagonalSet& s) {
  const std::size_t n = s.orbits.size();
  IntMatrix b(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto col = exchange_entries(s, k);
    for (std::size_t i = 0; i < n; ++i) b(i, k) = col[i];
  }
  return b;
}

std::optional<std::string> polygon_agreement(const IntMatrix& b, const std::vector<std::size_t>& sequence) {
  const CartanType t = classify_cartan_type(b).type;
  const DiagonalSet snake = initial_snake(b);
  DiagonalSet state = snake;
  Seed seed = initial_seed(b);
  const std::size_t n = t.rank;

  auto compare = [&](std::size_t step) -> std::optional<std::string> {
    const std::string where = " after " + std::to_string(step) + " steps";
    if (exchange_matrix_of(state) != seed.matrix.principal_part())
      return "exchange matrix " + to_string(exchange_matrix_of(state)) + " vs " +
             to_string(seed.matrix.principal_part()) + where;
    for (std::size_t i = 0; i < n; ++i) {
      const RootVector oracle = extract_denominator(seed.cluster[i]);
      RootVector model;
      const auto init = snake.position_of(state.orbits[i].front());
      if (init) {
        model.assign(n, 0);
        model[*init] = -1;
      } else {
        model = denominator_of_orbit(state.orbits[i], snake, t);
      }
      if (model != oracle)
        return "position " + std::to_string(i + 1) + ": polygon " + to_string(model) + " vs oracle " +
               to_string(oracle) + where;
    }
    return std::nullopt;
  };

  if (auto m = compare(0)) return m;
  for (std::size_t step = 0; step < sequence.size(); ++step) {
    state = flip(state, sequence[step]);
    seed = mutate_seed(seed, sequence[step]);
    if (!is_maximal(state)) return "flip produced a non-maximal set after " + std::to_string(step + 1) + " steps";
    if (auto m = compare(step + 1)) return m;
  }
  return std::nullopt;
}

}  // namespace clusterf
