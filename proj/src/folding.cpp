#include "clusterf/folding.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "clusterf/error.hpp"

namespace clusterf {

FoldingGroup::FoldingGroup(std::vector<std::size_t> sigma) : sigma_(std::move(sigma)) {
  const std::size_t n = sigma_.size();
  orbit_index_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma_[i] >= n || sigma_[sigma_[i]] != i) throw Error(ErrorKind::InvalidInput, "sigma is not an involution");
    if (sigma_[i] != i) order_ = 2;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (orbit_index_[i] != n) continue;
    std::vector<std::size_t> orbit{i};
    if (sigma_[i] != i) orbit.push_back(sigma_[i]);
    std::sort(orbit.begin(), orbit.end());
    for (std::size_t v : orbit) orbit_index_[v] = orbits_.size();
    orbits_.push_back(std::move(orbit));
  }
}

FoldingGroup FoldingGroup::trivial(std::size_t n) {
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  return FoldingGroup(std::move(id));
}

std::size_t FoldingGroup::extended(std::size_t i) const {
  const std::size_t n = size();
  if (i >= 2 * n) throw Error(ErrorKind::IndexOutOfRange, "extended sigma");
  return i < n ? sigma_[i] : sigma_[i - n] + n;
}

std::size_t FoldingGroup::stabilizer_size(std::size_t i) const { return order_ / orbits_.at(orbit_of(i)).size(); }

namespace {

void require_shape(const IntMatrix& b, const FoldingGroup& g) {
  if (b.cols() != g.size() || (b.rows() != g.size() && b.rows() != 2 * g.size()))
    throw Error(ErrorKind::DimensionMismatch, "matrix shape does not match the folding group");
}

/// Orbits of the row index set: principal orbits, then their frozen copies.
std::vector<std::vector<std::size_t>> row_orbits(const IntMatrix& b, const FoldingGroup& g) {
  std::vector<std::vector<std::size_t>> out = g.orbits();
  if (b.rows() == 2 * g.size()) {
    for (const auto& o : g.orbits()) {
      std::vector<std::size_t> shifted;
      for (std::size_t v : o) shifted.push_back(v + g.size());
      out.push_back(std::move(shifted));
    }
  }
  return out;
}

bool weakly_same_sign(int x, int y) { return (x >= 0 && y >= 0) || (x <= 0 && y <= 0); }

}  // namespace

bool is_invariant(const IntMatrix& b, const FoldingGroup& g) {
  require_shape(b, g);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (b(g.extended(i), g.sigma(j)) != b(i, j)) return false;
  return true;
}

IntMatrix quotient_matrix(const IntMatrix& b, const FoldingGroup& g) {
  require_shape(b, g);
  if (!is_invariant(b, g)) throw Error(ErrorKind::NotInvariant, "matrix is not fixed by sigma");
  const auto rows = row_orbits(b, g);
  const auto& cols = g.orbits();
  IntMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      bool first = true;
      for (std::size_t j : cols[c]) {
        int sum = 0;
        for (std::size_t l : rows[r]) sum += b(l, j);
        if (first) {
          out(r, c) = sum;
          first = false;
        } else if (out(r, c) != sum) {
          throw Error(ErrorKind::NotInvariant, "quotient depends on the representative");
        }
      }
    }
  }
  return out;
}

Unfolding unfold(const IntMatrix& bbar) {
  Classification cls;
  try {
    cls = classify_cartan_type(bbar);
  } catch (const Error& e) {
    throw Error(ErrorKind::WrongType, std::string("cannot unfold: ") + e.what());
  }
  if (!cls.is_identity()) throw Error(ErrorKind::WrongType, "cannot unfold a matrix that is not canonically labeled");
  const std::size_t n = cls.type.rank;

  std::vector<std::size_t> sigma, orbit_rep;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  CartanType big;
  if (cls.type.family == CartanFamily::C) {
    big = {CartanFamily::A, 2 * n - 1};
    for (std::size_t i = 0; i < 2 * n - 1; ++i) {
      sigma.push_back(2 * n - 2 - i);
      orbit_rep.push_back(std::min(i, 2 * n - 2 - i));
      if (i + 1 < 2 * n - 1) edges.emplace_back(i, i + 1);
    }
  } else if (cls.type.family == CartanFamily::B) {
    big = {CartanFamily::D, n + 1};
    for (std::size_t i = 0; i <= n; ++i) {
      sigma.push_back(i + 1 < n ? i : (i == n ? n - 1 : n));
      orbit_rep.push_back(std::min(i, n - 1));
    }
    // Path 0..n-2 forked into the leaves n-1 and n; for n = 2 this is A_3.
    for (std::size_t i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 2, n - 1);
    edges.emplace_back(n - 2, n);
  } else {
    throw Error(ErrorKind::WrongType, "only types B and C unfold");
  }

  // Orient each unfolded edge like its image; skew-symmetry fixes the rest.
  IntMatrix b(big.rank, big.rank);
  for (const auto& [p, q] : edges) {
    const int s = signum(bbar(orbit_rep[p], orbit_rep[q]));
    if (s == 0) throw Error(ErrorKind::WrongType, "folded edge carries no arrow");
    b(p, q) = s;
    b(q, p) = -s;
  }
  FoldingGroup group(std::move(sigma));
  if (!is_invariant(b, group) || quotient_matrix(b, group) != bbar)
    throw Error(ErrorKind::WrongType, "no invariant unfolding reproduces the matrix");
  return {std::move(b), std::move(group), big};
}

bool is_admissible(const IntMatrix& b, const FoldingGroup& g) {
  require_shape(b, g);
  for (const auto& o : g.orbits())
    for (std::size_t i : o)
      for (std::size_t j : o)
        if (b(i, j) != 0) return false;
  return true;
}

bool is_strongly_admissible(const IntMatrix& b, const FoldingGroup& g) {
  if (!is_admissible(b, g)) return false;
  const std::size_t n = g.size();
  for (const auto& o : row_orbits(b, g))
    for (std::size_t i : o)
      for (std::size_t j : o)
        for (std::size_t l = 0; l < n; ++l)
          if (!weakly_same_sign(b(i, l), b(j, l))) return false;
  for (const auto& o : g.orbits())
    for (std::size_t i : o)
      for (std::size_t j : o)
        for (std::size_t l = 0; l < b.rows(); ++l)
          if (!weakly_same_sign(b(l, i), b(l, j))) return false;
  return true;
}

IntMatrix orbit_mutation(const IntMatrix& b, const FoldingGroup& g, std::size_t orbit) {
  if (orbit >= g.orbit_count()) throw Error(ErrorKind::IndexOutOfRange, "orbit index");
  if (!is_admissible(b, g)) throw Error(ErrorKind::NotAdmissible, "orbit mutation needs an admissible matrix");
  const auto& o = g.orbits()[orbit];
  IntMatrix up = b, down = b;
  for (std::size_t k : o) up = mutate_matrix(up, k);
  for (auto it = o.rbegin(); it != o.rend(); ++it) down = mutate_matrix(down, *it);
  if (up != down) throw Error(ErrorKind::NotAdmissible, "orbit mutation depends on the order");
  return up;
}

Seed orbit_mutation(const Seed& s, const FoldingGroup& g, std::size_t orbit) {
  if (orbit >= g.orbit_count()) throw Error(ErrorKind::IndexOutOfRange, "orbit index");
  if (!is_admissible(s.matrix, g)) throw Error(ErrorKind::NotAdmissible, "orbit mutation needs an admissible matrix");
  const auto& o = g.orbits()[orbit];
  Seed up = s, down = s;
  for (std::size_t k : o) up = mutate_seed(up, k);
  for (auto it = o.rbegin(); it != o.rend(); ++it) down = mutate_seed(down, *it);
  if (!(up == down)) throw Error(ErrorKind::NotAdmissible, "orbit mutation depends on the order");
  return up;
}

LaurentPoly project_polynomial(const LaurentPoly& f, const FoldingGroup& g) {
  if (f.var_count() != g.size()) throw Error(ErrorKind::DimensionMismatch, "project_polynomial");
  std::vector<std::size_t> target(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) target[i] = g.orbit_of(i);
  return lp_rename(f, target, g.orbit_count());
}

LaurentPoly project_seed_variable(const LaurentPoly& x, const FoldingGroup& g) {
  const std::size_t n = g.size(), r = g.orbit_count();
  if (x.var_count() != 2 * n) throw Error(ErrorKind::DimensionMismatch, "project_seed_variable");
  std::vector<std::size_t> target(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    target[i] = g.orbit_of(i);
    target[n + i] = r + g.orbit_of(i);
  }
  return lp_rename(x, target, 2 * r);
}

RootVector quotient_vector(const RootVector& v, const FoldingGroup& g) {
  if (v.size() != g.size()) throw Error(ErrorKind::DimensionMismatch, "quotient_vector");
  RootVector out(g.orbit_count(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) out[g.orbit_of(i)] += v[i];
  return out;
}

bool FoldingReport::ok() const {
  return round_trip && std::all_of(roots.begin(), roots.end(), [](const FoldingRootReport& r) {
           return r.f_match && r.g_match;
         });
}

FoldingReport verify_folding(const IntMatrix& bbar, const ClusterTable& bar_table, const Unfolding& u,
                             const ClusterTable& table) {
  const Classification cls = classify_cartan_type(bbar);
  FoldingReport report{cls.type, bbar, u.type, u.matrix, false, {}};
  try {
    report.round_trip = quotient_matrix(u.matrix, u.group) == bbar;
  } catch (const Error&) {
    report.round_trip = false;
  }
  for (const auto& [dbar, rec] : bar_table) {
    FoldingRootReport r{dbar, {}, false, false, 0};
    for (const auto& [dprime, urec] : table) {
      if (quotient_vector(dprime, u.group) != dbar) continue;
      ++r.candidates;
      const bool f = project_polynomial(urec.f, u.group) == rec.f;
      const bool g = quotient_vector(urec.g, u.group) == rec.g;
      if (r.dprime.empty() || (f && g && !(r.f_match && r.g_match))) {
        r.dprime = dprime;
        r.f_match = f;
        r.g_match = g;
      }
    }
    if (r.candidates == 0) throw Error(ErrorKind::NoUnfoldedRoot, "no unfolded root projects to " + to_string(dbar));
    report.roots.push_back(std::move(r));
  }
  return report;
}

FoldingReport verify_folding(const IntMatrix& bbar) {
  const Unfolding u = unfold(bbar);
  return verify_folding(bbar, enumerate_finite_type(bbar), u, enumerate_finite_type(u.matrix));
}

namespace {

bool is_sink_or_source(const IntMatrix& b, std::size_t k) {
  bool in = false, out = false;
  for (std::size_t i = 0; i < b.cols(); ++i) {
    in = in || b(k, i) > 0;  // i -> k
    out = out || b(k, i) < 0;
  }
  return !(in && out);
}

Seed project_seed(const Seed& s, const FoldingGroup& g) {
  Seed out;
  out.matrix = quotient_matrix(s.matrix, g);
  for (const auto& o : g.orbits()) {
    const LaurentPoly x = project_seed_variable(s.cluster[o.front()], g);
    for (std::size_t v : o)
      if (project_seed_variable(s.cluster[v], g) != x)
        throw Error(ErrorKind::NotInvariant, "seed is not fixed by sigma");
    out.cluster.push_back(x);
  }
  return out;
}

}  // namespace

std::size_t check_orbit_sequence(const Unfolding& u, std::size_t steps) {
  Seed seed = initial_seed(u.matrix);
  Seed folded = project_seed(seed, u.group);
  std::size_t checked = 0;
  for (std::size_t p = 0; p < steps; ++p) {
    if (!is_strongly_admissible(seed.matrix, u.group))
      throw Error(ErrorKind::NotAdmissible, "step " + std::to_string(p) + " is not strongly admissible");
    const IntMatrix principal = seed.matrix.principal_part();
    std::vector<std::size_t> choices;
    for (std::size_t o = 0; o < u.group.orbit_count(); ++o)
      if (is_sink_or_source(principal, u.group.orbits()[o].front())) choices.push_back(o);
    if (choices.empty()) throw Error(ErrorKind::NotAcyclic, "no sink or source orbit");
    const std::size_t orbit = choices[p % choices.size()];
    seed = orbit_mutation(seed, u.group, orbit);
    folded = mutate_seed(folded, orbit);
    if (!(project_seed(seed, u.group) == folded))
      throw Error(ErrorKind::ProjectionMismatch, "projection does not commute with orbit " + std::to_string(orbit + 1));
    ++checked;
  }
  if (!is_strongly_admissible(seed.matrix, u.group))
    throw Error(ErrorKind::NotAdmissible, "final step is not strongly admissible");
  return checked;
}

}  // namespace clusterf
