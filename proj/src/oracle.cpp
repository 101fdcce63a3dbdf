#include "clusterf/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <unordered_set>

#include "clusterf/error.hpp"

namespace clusterf {

Seed initial_seed(const IntMatrix& b) {
  if (!b.is_square()) throw Error(ErrorKind::DimensionMismatch, "exchange matrix must be square");
  skew_symmetrizer(b);
  const std::size_t n = b.rows();
  Seed s;
  s.matrix = principal_extension(b);
  s.cluster.reserve(n);
  for (std::size_t i = 0; i < n; ++i) s.cluster.push_back(LaurentPoly::variable(2 * n, i));
  return s;
}

Seed mutate_seed(const Seed& s, std::size_t k) {
  const std::size_t n = s.rank();
  if (k >= n) throw Error(ErrorKind::IndexOutOfRange, "direction " + std::to_string(k + 1));
  const std::size_t vars = 2 * n;
  LaurentPoly plus = LaurentPoly::constant(vars, 1);
  LaurentPoly minus = LaurentPoly::constant(vars, 1);
  Exponent plus_y(vars, 0), minus_y(vars, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const int b = s.matrix(i, k);
    if (b > 0) plus *= s.cluster[i].pow(static_cast<unsigned>(b));
    if (b < 0) minus *= s.cluster[i].pow(static_cast<unsigned>(-b));
  }
  for (std::size_t j = 0; j < n; ++j) {
    const int c = s.matrix(n + j, k);
    plus_y[n + j] = pos_part(c);
    minus_y[n + j] = pos_part(-c);
  }
  const LaurentPoly numerator = plus.shifted(plus_y) + minus.shifted(minus_y);
  Seed out{s.cluster, mutate_matrix(s.matrix, k)};
  try {
    out.cluster[k] = lp_div_exact(numerator, s.cluster[k]);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotDivisible) throw;
    throw Error(ErrorKind::LaurentPhenomenonViolation, "exchange in direction " + std::to_string(k + 1));
  }
  return out;
}

namespace {

std::size_t half_vars(const LaurentPoly& x) {
  if (x.var_count() % 2 != 0) throw Error(ErrorKind::DimensionMismatch, "cluster variable needs 2n variables");
  return x.var_count() / 2;
}

}  // namespace

LaurentPoly extract_f_polynomial(const LaurentPoly& x) {
  const std::size_t n = half_vars(x);
  LaurentPoly f(n);
  Exponent u(n);
  for (const auto& [e, c] : x.terms()) {
    for (std::size_t j = 0; j < n; ++j) u[j] = e[n + j];
    f.add_term(u, c);
  }
  if (f.has_negative_exponent()) throw Error(ErrorKind::NotPolynomial, f.to_string());
  if (f.constant_term() != 1) throw Error(ErrorKind::NoConstantTerm, f.to_string());
  return f;
}

RootVector extract_g_vector(const LaurentPoly& x) {
  const std::size_t n = half_vars(x);
  const RootVector* found = nullptr;
  for (const auto& [e, c] : x.terms()) {
    if (!std::all_of(e.begin() + n, e.end(), [](int v) { return v == 0; })) continue;
    if (found) throw Error(ErrorKind::AmbiguousGVector, "several y-free terms");
    found = &e;
  }
  if (!found) throw Error(ErrorKind::AmbiguousGVector, "no y-free term");
  return RootVector(found->begin(), found->begin() + n);
}

RootVector extract_denominator(const LaurentPoly& x) {
  const std::size_t n = half_vars(x);
  const Exponent m = x.min_exponents();
  RootVector d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = -m[i];
  return d;
}

std::vector<LaurentPoly> y_hats(const IntMatrix& b) {
  const std::size_t n = b.cols();
  std::vector<LaurentPoly> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Exponent e(2 * n, 0);
    e[n + j] = 1;
    for (std::size_t i = 0; i < n; ++i) e[i] = b(i, j);
    out.push_back(LaurentPoly::monomial(e));
  }
  return out;
}

LaurentPoly reconstruct_variable(const LaurentPoly& f, const RootVector& g, const IntMatrix& b) {
  const std::size_t n = b.cols();
  if (f.var_count() != n || g.size() != n) throw Error(ErrorKind::DimensionMismatch, "reconstruct_variable");
  const auto images = y_hats(b);
  Exponent shift(2 * n, 0);
  std::copy(g.begin(), g.end(), shift.begin());
  return lp_substitute(f, images).shifted(shift);
}

namespace {

std::string seed_key(const Seed& s) {
  std::vector<std::string> keys;
  keys.reserve(s.rank());
  for (const auto& x : s.cluster) keys.push_back(canonical_key(x));
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (const auto& k : keys) out += k + '|';
  return out;
}

bool is_initial_variable(const LaurentPoly& x) {
  if (!x.is_monomial()) return false;
  const auto& [e, c] = *x.terms().begin();
  if (c != 1) return false;
  int ones = 0;
  for (int v : e) {
    if (v != 0 && v != 1) return false;
    ones += v;
  }
  return ones == 1;
}

}  // namespace

ClusterTable enumerate_finite_type(const IntMatrix& b, std::size_t cap, EnumerationStats* stats) {
  const Classification cls = classify_cartan_type(b);
  const std::size_t n = b.rows();

  // Expected keys, translated from canonical labels back to b's labels.
  std::set<RootVector> expected;
  for (const auto& r : positive_roots(cls.type)) {
    RootVector d(n);
    for (std::size_t c = 0; c < n; ++c) d[cls.relabeling[c]] = r[c];
    expected.insert(d);
  }

  struct Node {
    Seed seed;
    std::vector<std::size_t> path;
  };
  ClusterTable table;
  std::unordered_set<std::string> visited;
  std::deque<Node> frontier;
  Node start{initial_seed(b), {}};
  visited.insert(seed_key(start.seed));
  frontier.push_back(std::move(start));
  EnumerationStats local;

  while (!frontier.empty()) {
    Node node = std::move(frontier.front());
    frontier.pop_front();
    ++local.seeds;
    for (std::size_t k = 0; k < n; ++k) {
      if (!node.path.empty() && node.path.back() == k) continue;
      Seed next = mutate_seed(node.seed, k);
      ++local.mutations;
      std::string key = seed_key(next);
      if (!visited.insert(std::move(key)).second) continue;
      if (visited.size() > cap)
        throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(cap) + " seeds");
      std::vector<std::size_t> path = node.path;
      path.push_back(k);

      const LaurentPoly& x = next.cluster[k];
      if (!is_initial_variable(x)) {
        const RootVector d = extract_denominator(x);
        auto it = table.find(d);
        if (it == table.end()) {
          if (!expected.count(d)) throw Error(ErrorKind::ExtraRoot, "denominator " + to_string(d));
          if (!x.all_coefficients_positive())
            throw Error(ErrorKind::PositivityViolation, "non-positive coefficient in variable with denominator " + to_string(d));
          ClusterRecord rec{x, extract_f_polynomial(x), extract_g_vector(x), path};
          if (reconstruct_variable(rec.f, rec.g, b) != x)
            throw Error(ErrorKind::ReconstructionMismatch, "F/g reconstruction failed for " + to_string(d));
          table.emplace(d, std::move(rec));
        } else if (it->second.variable != x) {
          throw Error(ErrorKind::ExtraRoot, "two variables share denominator " + to_string(d));
        }
      }
      frontier.push_back(Node{std::move(next), std::move(path)});
    }
  }

  for (const auto& d : expected)
    if (!table.count(d)) throw Error(ErrorKind::MissingRoot, "no variable with denominator " + to_string(d));
  if (stats) *stats = local;
  return table;
}

}  // namespace clusterf
