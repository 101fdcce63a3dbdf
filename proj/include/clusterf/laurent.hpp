#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "clusterf/matrix.hpp"

namespace clusterf {

using Coeff = std::int64_t;
using Exponent = std::vector<int>;

Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

/// Sparse Laurent polynomial over Z. Terms are keyed by exponent vector in
/// ascending lexicographic order and never hold a zero coefficient.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Coeff>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t var_count) : var_count_(var_count) {}

  static LaurentPoly constant(std::size_t var_count, Coeff c);
  static LaurentPoly monomial(const Exponent& e, Coeff c = 1);
  static LaurentPoly variable(std::size_t var_count, std::size_t i);
  static LaurentPoly from_terms(std::size_t var_count, const std::vector<std::pair<Exponent, Coeff>>& terms);

  std::size_t var_count() const noexcept { return var_count_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  Coeff coefficient(const Exponent& e) const;
  Coeff constant_term() const;

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, Coeff c);

  /// Componentwise minimum / maximum exponent over all terms. Requires a
  /// nonzero polynomial.
  Exponent min_exponents() const;
  Exponent max_exponents() const;

  bool has_negative_exponent() const;
  /// Every coefficient strictly positive.
  bool all_coefficients_positive() const;
  Coeff coefficient_sum() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& r);
  LaurentPoly& operator-=(const LaurentPoly& r);
  LaurentPoly& operator*=(const LaurentPoly& r);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Multiply by the monomial x^shift.
  LaurentPoly shifted(const Exponent& shift) const;
  LaurentPoly pow(unsigned k) const;

  /// Human-readable form with variables named prefix1, prefix2, ...
  std::string to_string(const std::string& prefix = "u") const;

 private:
  void require_same(const LaurentPoly& r, const char* what) const;

  std::size_t var_count_ = 0;
  TermMap terms_;
};

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& r);
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& r);

/// Exact quotient p / r. Factors the content monomial out of r, then runs
/// lex-leading-term division with a full remainder check. Throws NotDivisible.
LaurentPoly lp_div_exact(const LaurentPoly& p, const LaurentPoly& r);

/// p(images[0], ..., images[n-1]). A variable that occurs with a negative
/// exponent must map to a monomial (NegativeExponentOnNonMonomial otherwise).
LaurentPoly lp_substitute(const LaurentPoly& p, std::span<const LaurentPoly> images);

/// Ring homomorphism sending variable i to variable target[i] of a ring with
/// target_var_count variables.
LaurentPoly lp_rename(const LaurentPoly& p, std::span<const std::size_t> target, std::size_t target_var_count);

/// Canonical serialization used for hashing and deduplicating seeds.
std::string canonical_key(const LaurentPoly& p);

}  // namespace clusterf
