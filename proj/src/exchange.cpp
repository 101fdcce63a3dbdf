#include "clusterf/exchange.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <queue>
#include <set>

#include "clusterf/error.hpp"

namespace clusterf {

namespace {

void require_square(const IntMatrix& b, const char* what) {
  if (!b.is_square()) throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": matrix is not square");
}

struct Fraction {
  long long num;
  long long den;
};

Fraction reduce(long long num, long long den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num, den);
  return {num / g, den / g};
}

// Undirected adjacency of the nonzero off-diagonal pattern.
std::vector<std::vector<std::size_t>> adjacency(const IntMatrix& b) {
  const std::size_t n = b.cols();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (b(i, j) != 0 || b(j, i) != 0)) adj[i].push_back(j);
  return adj;
}

}  // namespace

IntMatrix mutate_matrix(const IntMatrix& b, std::size_t k) {
  if (k >= b.cols()) throw Error(ErrorKind::IndexOutOfRange, "mutation direction " + std::to_string(k + 1));
  if (b.rows() < b.cols()) throw Error(ErrorKind::DimensionMismatch, "mutate_matrix: fewer rows than columns");
  IntMatrix out(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (i == k || j == k)
        out(i, j) = -b(i, j);
      else
        out(i, j) = b(i, j) + signum(b(i, k)) * pos_part(b(i, k) * b(k, j));
    }
  }
  return out;
}

IntMatrix principal_extension(const IntMatrix& b) {
  require_square(b, "principal_extension");
  const std::size_t n = b.cols();
  IntMatrix out(2 * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = b(i, j);
    out(n + i, i) = 1;
  }
  return out;
}

bool SkewSymmetrizer::certifies(const IntMatrix& b) const {
  const std::size_t n = b.cols();
  if (delta_hat.size() != n || b.rows() < n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (delta_hat[i] * b(i, j) != -delta_hat[j] * b(j, i)) return false;
  return true;
}

SkewSymmetrizer skew_symmetrizer(const IntMatrix& b) {
  require_square(b, "skew_symmetrizer");
  const std::size_t n = b.cols();
  for (std::size_t i = 0; i < n; ++i) {
    if (b(i, i) != 0) throw Error(ErrorKind::NotSkewSymmetrizable, "nonzero diagonal entry");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool zi = b(i, j) == 0, zj = b(j, i) == 0;
      if (zi != zj || (!zi && signum(b(i, j)) == signum(b(j, i))))
        throw Error(ErrorKind::NotSkewSymmetrizable,
                    "entries b" + std::to_string(i + 1) + std::to_string(j + 1) + " and b" + std::to_string(j + 1) +
                        std::to_string(i + 1) + " are not sign-skew");
    }
  }

  const auto adj = adjacency(b);
  std::vector<std::optional<Fraction>> ratio(n);
  std::vector<int> out(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (ratio[root]) continue;
    std::vector<std::size_t> component{root};
    ratio[root] = Fraction{1, 1};
    std::queue<std::size_t> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const std::size_t i = frontier.front();
      frontier.pop();
      for (std::size_t j : adj[i]) {
        // delta_j = -delta_i * b_ij / b_ji
        const Fraction want = reduce(-ratio[i]->num * b(i, j), ratio[i]->den * b(j, i));
        if (!ratio[j]) {
          ratio[j] = want;
          component.push_back(j);
          frontier.push(j);
        } else if (ratio[j]->num != want.num || ratio[j]->den != want.den) {
          throw Error(ErrorKind::NotSkewSymmetrizable, "inconsistent symmetrizer ratios around a cycle");
        }
      }
    }
    long long lcm = 1;
    for (std::size_t v : component) lcm = std::lcm(lcm, ratio[v]->den);
    long long g = 0;
    for (std::size_t v : component) g = std::gcd(g, ratio[v]->num * (lcm / ratio[v]->den));
    for (std::size_t v : component) out[v] = static_cast<int>(ratio[v]->num * (lcm / ratio[v]->den) / g);
  }
  return SkewSymmetrizer{out};
}

bool Quiver::has_arrow(std::size_t from, std::size_t to) const {
  return std::any_of(arrows.begin(), arrows.end(), [&](const Arrow& a) { return a.from == from && a.to == to; });
}

Quiver quiver_of(const IntMatrix& b) {
  require_square(b, "quiver_of");
  Quiver q{b.cols(), {}};
  for (std::size_t i = 0; i < b.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (i != j && b(j, i) > 0) q.arrows.push_back({i, j, b(j, i)});
  return q;
}

bool is_acyclic(const Quiver& q) {
  std::vector<std::size_t> indegree(q.vertex_count, 0);
  std::vector<std::vector<std::size_t>> out(q.vertex_count);
  for (const Arrow& a : q.arrows) {
    out[a.from].push_back(a.to);
    ++indegree[a.to];
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < q.vertex_count; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t w : out[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  return removed == q.vertex_count;
}

char family_letter(CartanFamily f) {
  switch (f) {
    case CartanFamily::A: return 'A';
    case CartanFamily::B: return 'B';
    case CartanFamily::C: return 'C';
    case CartanFamily::D: return 'D';
  }
  return '?';
}

CartanFamily family_from_letter(char c) {
  switch (c) {
    case 'A': case 'a': return CartanFamily::A;
    case 'B': case 'b': return CartanFamily::B;
    case 'C': case 'c': return CartanFamily::C;
    case 'D': case 'd': return CartanFamily::D;
    default: throw Error(ErrorKind::InvalidInput, std::string("unknown Cartan family '") + c + "'");
  }
}

std::string CartanType::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

void validate_cartan_type(CartanType t) {
  const std::size_t min_rank = t.family == CartanFamily::A ? 1 : t.family == CartanFamily::D ? 4 : 2;
  if (t.rank < min_rank)
    throw Error(ErrorKind::WrongType, t.name() + " is below the minimum rank " + std::to_string(min_rank));
}

bool Classification::is_identity() const {
  for (std::size_t i = 0; i < relabeling.size(); ++i)
    if (relabeling[i] != i) return false;
  return true;
}

IntMatrix relabel(const IntMatrix& b, const std::vector<std::size_t>& perm) {
  require_square(b, "relabel");
  if (perm.size() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "relabel: permutation size");
  IntMatrix out(b.rows(), b.cols());
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = 0; j < perm.size(); ++j) out(i, j) = b(perm[i], perm[j]);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> dynkin_edges(CartanType t) {
  validate_cartan_type(t);
  const std::size_t n = t.rank;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (t.family == CartanFamily::D) {
    for (std::size_t i = 0; i + 3 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 3, n - 2);
    edges.emplace_back(n - 3, n - 1);
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  }
  return edges;
}

namespace {

// |b(i,j)| for the canonical labeling; i, j adjacent in the diagram.
int cartan_magnitude(CartanType t, std::size_t i, std::size_t j) {
  const std::size_t n = t.rank;
  if (t.family == CartanFamily::B && i == n - 1 && j == n - 2) return 2;
  if (t.family == CartanFamily::C && i == n - 2 && j == n - 1) return 2;
  return 1;
}

bool matches_canonical(CartanType t, const IntMatrix& b) {
  const std::size_t n = t.rank;
  IntMatrix pattern(n, n);
  for (auto [i, j] : dynkin_edges(t)) {
    pattern(i, j) = cartan_magnitude(t, i, j);
    pattern(j, i) = cartan_magnitude(t, j, i);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(b(i, j)) != pattern(i, j)) return false;
  return true;
}

// Orderings of the vertices that could be a canonical labeling of a tree
// with the given adjacency: both traversals of a path, or every choice of
// long branch and leaf order around a degree-3 fork.
std::vector<std::vector<std::size_t>> candidate_labelings(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<std::size_t>> out;
  auto walk = [&](std::size_t start, std::size_t prev) {
    std::vector<std::size_t> path{start};
    std::size_t cur = start;
    while (true) {
      std::size_t next = n;
      for (std::size_t w : adj[cur])
        if (w != prev) next = w;
      if (adj[cur].size() > 2 || next == n) break;
      prev = cur;
      cur = next;
      path.push_back(cur);
    }
    return path;
  };
  if (n == 1) return {{0}};
  std::vector<std::size_t> forks;
  for (std::size_t v = 0; v < n; ++v)
    if (adj[v].size() > 2) forks.push_back(v);
  if (forks.empty()) {
    for (std::size_t v = 0; v < n; ++v) {
      if (adj[v].size() != 1) continue;
      auto path = walk(v, n);
      if (path.size() == n) out.push_back(path);
    }
    return out;
  }
  if (forks.size() != 1 || adj[forks[0]].size() != 3) return out;
  const std::size_t fork = forks[0];
  for (std::size_t branch = 0; branch < 3; ++branch) {
    std::vector<std::size_t> leaves;
    for (std::size_t b = 0; b < 3; ++b)
      if (b != branch) leaves.push_back(adj[fork][b]);
    if (adj[leaves[0]].size() != 1 || adj[leaves[1]].size() != 1) continue;
    // Long branch walked from the fork outward, then reversed.
    auto arm = walk(adj[fork][branch], fork);
    std::vector<std::size_t> order(arm.rbegin(), arm.rend());
    order.push_back(fork);
    if (order.size() + 2 != n) continue;
    for (int swap = 0; swap < 2; ++swap) {
      auto full = order;
      full.push_back(leaves[swap]);
      full.push_back(leaves[1 - swap]);
      out.push_back(full);
    }
  }
  return out;
}

}  // namespace

Classification classify_cartan_type(const IntMatrix& b) {
  require_square(b, "classify_cartan_type");
  skew_symmetrizer(b);
  if (!is_acyclic(quiver_of(b))) throw Error(ErrorKind::NotAcyclic, "the quiver has a directed cycle");
  const std::size_t n = b.cols();
  if (n == 0) throw Error(ErrorKind::NotClassicalType, "empty matrix");

  const auto adj = adjacency(b);
  std::size_t edge_count = 0;
  for (const auto& a : adj) edge_count += a.size();
  edge_count /= 2;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n || edge_count + 1 != n)
    throw Error(ErrorKind::NotClassicalType, "underlying graph is not a connected tree");

  std::optional<Classification> best;
  for (const auto& perm : candidate_labelings(adj)) {
    const IntMatrix canon = relabel(b, perm);
    for (CartanFamily f : {CartanFamily::A, CartanFamily::B, CartanFamily::C, CartanFamily::D}) {
      const CartanType t{f, n};
      const std::size_t min_rank = f == CartanFamily::A ? 1 : f == CartanFamily::D ? 4 : 2;
      if (n < min_rank) continue;
      // Path labelings never match D and fork labelings never match A/B/C,
      // since the edge pattern is checked entry by entry.
      if (!matches_canonical(t, canon)) continue;
      Classification c{t, perm};
      if (!best || c.is_identity() || (!best->is_identity() && perm < best->relabeling)) best = c;
    }
  }
  if (!best) throw Error(ErrorKind::NotClassicalType, "no classical Dynkin diagram matches " + to_string(b));
  return *best;
}

IntMatrix matrix_from_arrows(CartanType t, const std::vector<std::pair<std::size_t, std::size_t>>& arrows) {
  const auto edges = dynkin_edges(t);
  IntMatrix b(t.rank, t.rank);
  std::vector<int> covered(edges.size(), 0);
  for (auto [from, to] : arrows) {
    if (from >= t.rank || to >= t.rank)
      throw Error(ErrorKind::InvalidInput, "arrow endpoint outside [1, " + std::to_string(t.rank) + "]");
    const auto key = std::minmax(from, to);
    const auto it = std::find(edges.begin(), edges.end(), std::pair{key.first, key.second});
    if (it == edges.end())
      throw Error(ErrorKind::InvalidInput, "arrow " + std::to_string(from + 1) + "->" + std::to_string(to + 1) +
                                               " is not an edge of the " + t.name() + " diagram");
    ++covered[static_cast<std::size_t>(it - edges.begin())];
    b(to, from) = cartan_magnitude(t, to, from);
    b(from, to) = -cartan_magnitude(t, from, to);
  }
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (covered[e] != 1)
      throw Error(ErrorKind::InvalidInput, "diagram edge " + std::to_string(edges[e].first + 1) + "-" +
                                               std::to_string(edges[e].second + 1) + " is oriented " +
                                               std::to_string(covered[e]) + " times (expected once)");
  return b;
}

std::vector<IntMatrix> all_orientations(CartanType t) {
  const auto edges = dynkin_edges(t);
  std::vector<IntMatrix> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << edges.size()); ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> arrows;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [lo, hi] = edges[e];
      if (mask >> e & 1)
        arrows.emplace_back(hi, lo);
      else
        arrows.emplace_back(lo, hi);
    }
    out.push_back(matrix_from_arrows(t, arrows));
  }
  return out;
}

std::vector<RootVector> positive_roots(CartanType t) {
  validate_cartan_type(t);
  const std::size_t n = t.rank;
  std::set<RootVector> roots;
  auto interval = [&](std::size_t i, std::size_t j) {
    RootVector v(n, 0);
    for (std::size_t k = i; k <= j; ++k) v[k] = 1;
    return v;
  };
  // Intervals e_i + ... + e_j are roots in every family except that
  // e_{n-1} + e_n straddles the two leaves of the D fork.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (t.family == CartanFamily::D && i == n - 2 && j == n - 1) continue;
      roots.insert(interval(i, j));
    }
  switch (t.family) {
    case CartanFamily::A:
      break;
    case CartanFamily::B:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          RootVector v = interval(i, n - 1);
          for (std::size_t k = j; k < n; ++k) v[k] = 2;
          roots.insert(v);
        }
      break;
    case CartanFamily::C:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j + 1 < n; ++j) {
          RootVector v = interval(i, n - 1);
          for (std::size_t k = j; k + 1 < n; ++k) v[k] = 2;
          roots.insert(v);
        }
      for (std::size_t i = 0; i + 1 < n; ++i) {
        RootVector v = interval(i, n - 1);
        for (std::size_t k = i; k + 1 < n; ++k) v[k] = 2;
        roots.insert(v);
      }
      break;
    case CartanFamily::D:
      for (std::size_t i = 0; i + 2 < n; ++i) {
        RootVector v = interval(i, n - 3);
        v[n - 1] = 1;
        roots.insert(v);
      }
      for (std::size_t i = 0; i + 2 < n; ++i)
        for (std::size_t j = i + 1; j + 2 < n; ++j) {
          RootVector v = interval(i, n - 1);
          for (std::size_t k = j; k + 2 < n; ++k) v[k] = 2;
          roots.insert(v);
        }
      break;
  }
  return {roots.begin(), roots.end()};
}

bool is_positive_root(CartanType t, const RootVector& d) {
  const auto roots = positive_roots(t);
  return std::binary_search(roots.begin(), roots.end(), d);
}

std::vector<int> type_vector(CartanType t) {
  validate_cartan_type(t);
  std::vector<int> delta(t.rank, 1);
  if (t.family == CartanFamily::B) {
    std::fill(delta.begin(), delta.end(), 2);
    delta.back() = 1;
  } else if (t.family == CartanFamily::C) {
    delta.back() = 2;
  }
  return delta;
}

}  // namespace clusterf
