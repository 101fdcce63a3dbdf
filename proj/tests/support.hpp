#pragma once

// Shared test data and independent oracles. Nothing here calls into the
// library code it is meant to check.

#include <algorithm>
#include <cstdlib>
#include <utility>
#include <vector>

#include "clusterf/laurent.hpp"
#include "clusterf/matrix.hpp"
#include "clusterf/quantum.hpp"

namespace testdata {

using clusterf::Coeff;
using clusterf::IntMatrix;
using clusterf::RootVector;

inline const IntMatrix kB4{{0, -1, 0, 0}, {1, 0, 1, 0}, {0, -1, 0, -1}, {0, 0, 2, 0}};

struct ClassicalGolden {
  RootVector d;
  std::vector<std::pair<RootVector, Coeff>> terms;
  RootVector g;
};

// Worked B4 example. For the largest root, u2^2 u3 u4^2 carries coefficient 2
// and u2^2 u3^2 u4^2 carries 1; the q = 1 value of the quantum table agrees.
inline const std::vector<ClassicalGolden>& b4_classical() {
  static const std::vector<ClassicalGolden> g{
      {{0, 1, 0, 0}, {{{0, 1, 0, 0}, 1}, {{0, 0, 0, 0}, 1}}, {1, -1, 1, 0}},
      {{0, 1, 1, 0}, {{{0, 1, 1, 0}, 1}, {{0, 1, 0, 0}, 1}, {{0, 0, 0, 0}, 1}}, {1, -1, 0, 0}},
      {{0, 1, 1, 1},
       {{{0, 1, 1, 1}, 1}, {{0, 1, 0, 1}, 1}, {{0, 0, 0, 1}, 1}, {{0, 1, 0, 0}, 1}, {{0, 0, 0, 0}, 1}},
       {1, -1, 1, -1}},
      {{0, 1, 2, 2},
       {{{0, 1, 2, 2}, 1},
        {{0, 1, 1, 2}, 2},
        {{0, 1, 1, 1}, 2},
        {{0, 0, 1, 2}, 1},
        {{0, 1, 0, 2}, 1},
        {{0, 1, 0, 1}, 2},
        {{0, 1, 0, 0}, 1},
        {{0, 0, 0, 2}, 1},
        {{0, 0, 0, 1}, 2},
        {{0, 0, 0, 0}, 1}},
       {1, -1, 1, -2}},
      {{1, 2, 2, 2},
       {{{1, 2, 2, 2}, 1}, {{1, 2, 1, 2}, 2}, {{0, 2, 1, 2}, 2}, {{1, 2, 1, 1}, 2}, {{1, 1, 1, 2}, 1},
        {{1, 2, 0, 2}, 1}, {{1, 2, 0, 1}, 2}, {{1, 2, 0, 0}, 1}, {{1, 1, 0, 2}, 1}, {{0, 2, 2, 2}, 1},
        {{0, 2, 1, 1}, 2}, {{0, 1, 1, 2}, 2}, {{0, 1, 0, 2}, 2}, {{0, 2, 0, 1}, 2}, {{0, 2, 0, 2}, 1},
        {{0, 2, 0, 0}, 1}, {{0, 0, 0, 2}, 1}, {{0, 1, 1, 1}, 2}, {{1, 1, 0, 1}, 2}, {{1, 1, 0, 0}, 1},
        {{0, 1, 0, 1}, 4}, {{0, 0, 0, 1}, 2}, {{0, 1, 0, 0}, 2}, {{0, 0, 0, 0}, 1}},
       {1, -2, 2, -2}},
  };
  return g;
}

struct QuantumGolden {
  RootVector d;
  // Exponent vector and the q-powers whose sum is its coefficient.
  std::vector<std::pair<RootVector, std::vector<int>>> terms;
};

// Same matrix with delta_hat = (4,4,4,2), i.e. d_scale = 2.
inline const std::vector<QuantumGolden>& b4_quantum() {
  static const std::vector<QuantumGolden> g{
      {{0, 1, 0, 0}, {{{0, 1, 0, 0}, {2}}, {{0, 0, 0, 0}, {0}}}},
      {{0, 1, 1, 0}, {{{0, 1, 1, 0}, {2}}, {{0, 1, 0, 0}, {2}}, {{0, 0, 0, 0}, {0}}}},
      {{0, 1, 1, 1},
       {{{0, 1, 1, 1}, {1}}, {{0, 1, 0, 1}, {3}}, {{0, 0, 0, 1}, {1}}, {{0, 1, 0, 0}, {2}}, {{0, 0, 0, 0}, {0}}}},
      {{0, 1, 2, 2},
       {{{0, 1, 2, 2}, {2}},
        {{0, 0, 1, 2}, {2}},
        {{0, 0, 0, 2}, {4}},
        {{0, 1, 1, 1}, {1, 3}},
        {{0, 1, 1, 2}, {2, 6}},
        {{0, 1, 0, 2}, {6}},
        {{0, 1, 0, 1}, {3, 5}},
        {{0, 0, 0, 1}, {1, 3}},
        {{0, 1, 0, 0}, {2}},
        {{0, 0, 0, 0}, {0}}}},
      {{1, 2, 2, 2},
       {{{1, 2, 2, 2}, {2}},       {{0, 2, 2, 2}, {4}},       {{1, 2, 1, 2}, {4, 8}},  {{0, 2, 1, 2}, {6, 10}},
        {{1, 2, 0, 2}, {10}},      {{0, 2, 0, 2}, {12}},      {{1, 2, 1, 1}, {3, 5}},  {{1, 2, 0, 1}, {7, 9}},
        {{0, 2, 1, 1}, {5, 7}},    {{1, 2, 0, 0}, {6}},       {{0, 2, 0, 1}, {9, 11}}, {{0, 2, 0, 0}, {8}},
        {{1, 1, 1, 2}, {2}},       {{1, 1, 0, 2}, {6}},       {{0, 1, 1, 2}, {2, 6}},  {{0, 1, 0, 2}, {6, 10}},
        {{0, 0, 0, 2}, {4}},       {{1, 1, 0, 1}, {3, 5}},    {{0, 1, 1, 1}, {1, 3}},  {{0, 1, 0, 1}, {3, 5, 7, 9}},
        {{1, 1, 0, 0}, {2}},       {{0, 0, 0, 1}, {1, 3}},    {{0, 1, 0, 0}, {2, 6}},  {{0, 0, 0, 0}, {0}}}},
  };
  return g;
}

inline clusterf::LaurentPoly to_poly(const ClassicalGolden& g) {
  clusterf::LaurentPoly p(g.d.size());
  for (const auto& [e, c] : g.terms) p.add_term(e, c);
  return p;
}

// Term map keyed by exponent, values are v-exponent -> coefficient.
using QuantumTerms = std::vector<std::pair<RootVector, std::vector<std::pair<int, Coeff>>>>;

inline QuantumTerms to_terms(const QuantumGolden& g) {
  QuantumTerms out;
  for (const auto& [a, qs] : g.terms) {
    std::vector<std::pair<int, Coeff>> c;
    for (int k : qs) c.emplace_back(2 * k, 1);
    std::sort(c.begin(), c.end());
    out.emplace_back(a, std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline QuantumTerms to_terms(const clusterf::QuantumTorusElement& x) {
  QuantumTerms out;
  for (const auto& [a, c] : x.terms())
    out.emplace_back(a, std::vector<std::pair<int, Coeff>>(c.terms().begin(), c.terms().end()));
  return out;
}

// Reordering oracle for normalized quantum-torus monomials.
//
// Z^c = q^(1/2 sum_{i<j} lam(j,i) c_i c_j) Z_1^c_1 ... Z_n^c_n with
// Z_i Z_j = q^lam(i,j) Z_j Z_i. The product Z^a Z^b is unnormalized into a
// word of single letters Z_i^(+-1), bubble sorted into index order while
// accumulating the q-power of every swap, and renormalized. Returns the
// v-exponent (v = q^(1/2)).
inline int reorder_v_power(const RootVector& a, const RootVector& b, const IntMatrix& exchange,
                           const std::vector<int>& delta_hat) {
  const std::size_t n = a.size();
  auto lam = [&](std::size_t i, std::size_t j) { return delta_hat[i] * exchange(i, j); };
  auto norm = [&](const RootVector& c) {
    int s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += lam(j, i) * c[i] * c[j];
    return s;  // v-exponent of the normalizing prefactor
  };
  std::vector<std::pair<std::size_t, int>> word;
  for (const RootVector* c : {&a, &b})
    for (std::size_t i = 0; i < n; ++i)
      for (int k = 0; k < std::abs((*c)[i]); ++k) word.emplace_back(i, (*c)[i] > 0 ? 1 : -1);
  int q_swaps = 0;
  for (std::size_t pass = 0; pass < word.size(); ++pass) {
    for (std::size_t p = 0; p + 1 < word.size(); ++p) {
      auto& [i, s] = word[p];
      auto& [j, t] = word[p + 1];
      if (i <= j) continue;
      // Z_i^s Z_j^t = q^(s t lam(i,j)) Z_j^t Z_i^s
      q_swaps += s * t * lam(i, j);
      std::swap(word[p], word[p + 1]);
    }
  }
  RootVector sum(n);
  for (std::size_t i = 0; i < n; ++i) sum[i] = a[i] + b[i];
  return norm(a) + norm(b) + 2 * q_swaps - norm(sum);
}

}  // namespace testdata
