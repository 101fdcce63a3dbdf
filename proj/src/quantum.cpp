#include "clusterf/quantum.hpp"

#include <sstream>

#include "clusterf/error.hpp"

namespace clusterf {

QCoefficient QCoefficient::v_power(int v_exp, Coeff c) {
  QCoefficient out;
  out.add_term(v_exp, c);
  return out;
}

QCoefficient QCoefficient::symmetric_pair(int k) {
  QCoefficient out;
  out.add_term(-k, 1);
  out.add_term(k, 1);
  return out;
}

Coeff QCoefficient::coefficient(int v_exp) const {
  auto it = terms_.find(v_exp);
  return it == terms_.end() ? 0 : it->second;
}

Coeff QCoefficient::at_one() const {
  Coeff s = 0;
  for (const auto& [k, c] : terms_) s = checked_add(s, c);
  return s;
}

void QCoefficient::add_term(int v_exp, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(v_exp, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

QCoefficient QCoefficient::shifted(int v_exp) const {
  QCoefficient out;
  for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k + v_exp, c);
  return out;
}

QCoefficient QCoefficient::pow(unsigned k) const {
  QCoefficient out = one();
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

QCoefficient& QCoefficient::operator+=(const QCoefficient& r) {
  for (const auto& [k, c] : r.terms_) add_term(k, c);
  return *this;
}

QCoefficient operator*(const QCoefficient& a, const QCoefficient& b) {
  QCoefficient out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, checked_mul(ca, cb));
  return out;
}

std::string QCoefficient::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const Coeff mag = c < 0 ? -c : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'q';
    if (k % 2 == 0) {
      if (k != 2) os << '^' << k / 2;
    } else {
      os << "^(" << k << "/2)";
    }
  }
  return os.str();
}

QCoefficient qc_bar(const QCoefficient& c) {
  QCoefficient out;
  for (const auto& [k, x] : c.terms()) out.add_term(-k, x);
  return out;
}

SkewPairing::SkewPairing(const IntMatrix& b, const SkewSymmetrizer& delta_hat)
    : b_(b), delta_hat_(delta_hat), lambda_(b.cols(), b.cols()) {
  if (!b.is_square() || delta_hat.delta_hat.size() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "SkewPairing");
  for (std::size_t i = 0; i < b.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) lambda_(i, j) = delta_hat.delta_hat[i] * b(i, j);
  if (!is_skew()) throw Error(ErrorKind::NotSkewSymmetrizable, "delta_hat does not symmetrize the matrix");
}

int SkewPairing::form(const RootVector& a, const RootVector& b) const {
  const std::size_t n = dimension();
  if (a.size() != n || b.size() != n) throw Error(ErrorKind::DimensionMismatch, "SkewPairing::form");
  int s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) s += a[i] * lambda_(i, j) * b[j];
  }
  return s;
}

bool SkewPairing::is_skew() const {
  for (std::size_t i = 0; i < dimension(); ++i)
    for (std::size_t j = 0; j < dimension(); ++j)
      if (lambda_(i, j) != -lambda_(j, i)) return false;
  return true;
}

MonomialProduct qt_monomial_mul(const RootVector& a, const RootVector& b, const SkewPairing& lambda) {
  RootVector sum(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
  return {lambda.form(a, b), std::move(sum)};
}

QuantumTorusElement QuantumTorusElement::one(std::shared_ptr<const SkewPairing> algebra) {
  const std::size_t n = algebra->dimension();
  return monomial(std::move(algebra), RootVector(n, 0));
}

QuantumTorusElement QuantumTorusElement::monomial(std::shared_ptr<const SkewPairing> algebra, const RootVector& a,
                                                  const QCoefficient& c) {
  QuantumTorusElement out(std::move(algebra));
  out.add_term(a, c);
  return out;
}

QCoefficient QuantumTorusElement::coefficient(const RootVector& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? QCoefficient{} : it->second;
}

void QuantumTorusElement::add_term(const RootVector& a, const QCoefficient& c) {
  if (a.size() != dimension()) throw Error(ErrorKind::DimensionMismatch, "quantum term exponent length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void QuantumTorusElement::require_same(const QuantumTorusElement& r, const char* what) const {
  if (!(algebra_ == r.algebra_ || *algebra_ == *r.algebra_))
    throw Error(ErrorKind::AlgebraMismatch, std::string(what) + ": elements live in different quantum tori");
}

QuantumTorusElement& QuantumTorusElement::operator+=(const QuantumTorusElement& r) {
  require_same(r, "add");
  for (const auto& [a, c] : r.terms_) add_term(a, c);
  return *this;
}

QuantumTorusElement QuantumTorusElement::scaled(int v_exp) const {
  QuantumTorusElement out(algebra_);
  for (const auto& [a, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), a, c.shifted(v_exp));
  return out;
}

bool operator==(const QuantumTorusElement& x, const QuantumTorusElement& y) {
  return (x.algebra_ == y.algebra_ || *x.algebra_ == *y.algebra_) && x.terms_ == y.terms_;
}

std::string QuantumTorusElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [a, c] = *it;
    os << (first ? "" : " + ");
    first = false;
    bool is_const = true;
    for (int x : a) is_const = is_const && x == 0;
    const std::string cs = c.to_string();
    if (is_const) {
      os << (c.terms().size() > 1 ? "(" + cs + ")" : cs);
      continue;
    }
    if (!(c.terms().size() == 1 && c.terms().begin()->first == 0 && c.terms().begin()->second == 1))
      os << (c.terms().size() > 1 ? "(" + cs + ")" : cs) << '*';
    os << "Z^" << clusterf::to_string(a);
  }
  return os.str();
}

QuantumTorusElement qt_mul(const QuantumTorusElement& x, const QuantumTorusElement& y) {
  if (!(x.algebra() == y.algebra() || *x.algebra() == *y.algebra()))
    throw Error(ErrorKind::AlgebraMismatch, "qt_mul: elements live in different quantum tori");
  QuantumTorusElement out(x.algebra());
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      auto [v, sum] = qt_monomial_mul(a, b, *x.algebra());
      out.add_term(sum, (ca * cb).shifted(v));
    }
  }
  return out;
}

int triple_dot(const RootVector& a, const RootVector& b, const RootVector& c) {
  if (a.size() != b.size() || b.size() != c.size()) throw Error(ErrorKind::DimensionMismatch, "triple_dot");
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i] * c[i];
  return s;
}

QuantumTorusElement L_apply(const RootVector& a, const QuantumTorusElement& x, const SkewSymmetrizer& delta_hat) {
  QuantumTorusElement out(x.algebra());
  for (const auto& [b, c] : x.terms()) out.add_term(b, c.shifted(-2 * triple_dot(a, b, delta_hat.delta_hat)));
  return out;
}

LaurentPoly qt_specialize_classical(const QuantumTorusElement& x) {
  LaurentPoly out(x.dimension());
  for (const auto& [a, c] : x.terms()) out.add_term(a, c.at_one());
  return out;
}

}  // namespace clusterf
