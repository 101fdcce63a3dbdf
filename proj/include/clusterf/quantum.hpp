#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "clusterf/exchange.hpp"
#include "clusterf/laurent.hpp"

namespace clusterf {

/// Integer Laurent polynomial in v = q^(1/2). Keys are v-exponents, so q^c
/// is stored under 2c.
class QCoefficient {
 public:
  QCoefficient() = default;

  static QCoefficient v_power(int v_exp, Coeff c = 1);
  static QCoefficient one() { return v_power(0); }
  /// v^(-k) + v^k.
  static QCoefficient symmetric_pair(int k);

  const std::map<int, Coeff>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coeff coefficient(int v_exp) const;
  /// Value at v = 1.
  Coeff at_one() const;

  void add_term(int v_exp, Coeff c);
  QCoefficient shifted(int v_exp) const;
  QCoefficient pow(unsigned k) const;

  QCoefficient& operator+=(const QCoefficient& r);
  friend QCoefficient operator+(QCoefficient a, const QCoefficient& b) { return a += b; }
  friend QCoefficient operator*(const QCoefficient& a, const QCoefficient& b);
  friend bool operator==(const QCoefficient&, const QCoefficient&) = default;

  /// Text form in q, e.g. "q^3 + q^5" or "q^(1/2)".
  std::string to_string() const;

 private:
  std::map<int, Coeff> terms_;
};

/// v -> v^(-1).
QCoefficient qc_bar(const QCoefficient& c);

/// Lambda(i,j) = delta_hat_i * b_ij. Skew-symmetric whenever delta_hat
/// symmetrizes b.
class SkewPairing {
 public:
  SkewPairing(const IntMatrix& b, const SkewSymmetrizer& delta_hat);

  std::size_t dimension() const noexcept { return lambda_.rows(); }
  const IntMatrix& matrix() const noexcept { return lambda_; }
  const IntMatrix& exchange_matrix() const noexcept { return b_; }
  const SkewSymmetrizer& symmetrizer() const noexcept { return delta_hat_; }

  /// a^T Lambda b, which equals 2 theta(a, b).
  int form(const RootVector& a, const RootVector& b) const;

  bool is_skew() const;

  friend bool operator==(const SkewPairing& x, const SkewPairing& y) {
    return x.b_ == y.b_ && x.delta_hat_ == y.delta_hat_;
  }

 private:
  IntMatrix b_;
  SkewSymmetrizer delta_hat_;
  IntMatrix lambda_;
};

struct MonomialProduct {
  int v_power;
  RootVector exponent;
  friend bool operator==(const MonomialProduct&, const MonomialProduct&) = default;
};

/// Z^a * Z^b = q^(theta(a,b)) Z^(a+b) in the normalized basis, returned as
/// the v-exponent a^T Lambda b together with a + b.
MonomialProduct qt_monomial_mul(const RootVector& a, const RootVector& b, const SkewPairing& lambda);

/// Finite sum of QCoefficient * Z^a over the normalized monomial basis.
class QuantumTorusElement {
 public:
  using TermMap = std::map<RootVector, QCoefficient>;

  explicit QuantumTorusElement(std::shared_ptr<const SkewPairing> algebra) : algebra_(std::move(algebra)) {}

  static QuantumTorusElement one(std::shared_ptr<const SkewPairing> algebra);
  /// c * Z^a.
  static QuantumTorusElement monomial(std::shared_ptr<const SkewPairing> algebra, const RootVector& a,
                                      const QCoefficient& c = QCoefficient::one());

  const std::shared_ptr<const SkewPairing>& algebra() const noexcept { return algebra_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t dimension() const { return algebra_->dimension(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  QCoefficient coefficient(const RootVector& a) const;

  void add_term(const RootVector& a, const QCoefficient& c);

  QuantumTorusElement& operator+=(const QuantumTorusElement& r);
  friend QuantumTorusElement operator+(QuantumTorusElement a, const QuantumTorusElement& b) { return a += b; }
  /// Multiply every coefficient by v^v_exp.
  QuantumTorusElement scaled(int v_exp) const;

  /// Same algebra (compared by value) and same terms.
  friend bool operator==(const QuantumTorusElement& x, const QuantumTorusElement& y);

  std::string to_string() const;

 private:
  void require_same(const QuantumTorusElement& r, const char* what) const;

  std::shared_ptr<const SkewPairing> algebra_;
  TermMap terms_;
};

QuantumTorusElement qt_mul(const QuantumTorusElement& x, const QuantumTorusElement& y);

/// L[a](Z^b) = q^(-a.b.delta_hat) Z^b, extended linearly.
QuantumTorusElement L_apply(const RootVector& a, const QuantumTorusElement& x, const SkewSymmetrizer& delta_hat);

/// q = 1 and Z^a -> u^a.
LaurentPoly qt_specialize_classical(const QuantumTorusElement& x);

/// a . b . c = sum a_i b_i c_i.
int triple_dot(const RootVector& a, const RootVector& b, const RootVector& c);

}  // namespace clusterf
