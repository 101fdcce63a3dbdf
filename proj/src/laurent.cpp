#include "clusterf/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "clusterf/error.hpp"

namespace clusterf {

Coeff checked_add(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "coefficient addition");
  return out;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "coefficient multiplication");
  return out;
}

LaurentPoly LaurentPoly::constant(std::size_t var_count, Coeff c) {
  LaurentPoly p(var_count);
  p.add_term(Exponent(var_count, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, Coeff c) {
  LaurentPoly p(e.size());
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t var_count, std::size_t i) {
  if (i >= var_count) throw Error(ErrorKind::IndexOutOfRange, "variable index");
  return monomial(unit_vector(var_count, i));
}

LaurentPoly LaurentPoly::from_terms(std::size_t var_count, const std::vector<std::pair<Exponent, Coeff>>& terms) {
  LaurentPoly p(var_count);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

Coeff LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

Coeff LaurentPoly::constant_term() const { return coefficient(Exponent(var_count_, 0)); }

void LaurentPoly::add_term(const Exponent& e, Coeff c) {
  if (e.size() != var_count_) throw Error(ErrorKind::DimensionMismatch, "term exponent length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Exponent LaurentPoly::min_exponents() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidInput, "min_exponents of zero polynomial");
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < var_count_; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

Exponent LaurentPoly::max_exponents() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidInput, "max_exponents of zero polynomial");
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < var_count_; ++i) m[i] = std::max(m[i], e[i]);
  return m;
}

bool LaurentPoly::has_negative_exponent() const {
  for (const auto& [e, c] : terms_)
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) return true;
  return false;
}

bool LaurentPoly::all_coefficients_positive() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

Coeff LaurentPoly::coefficient_sum() const {
  Coeff s = 0;
  for (const auto& [e, c] : terms_) s = checked_add(s, c);
  return s;
}

void LaurentPoly::require_same(const LaurentPoly& r, const char* what) const {
  if (var_count_ != r.var_count_)
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": " + std::to_string(var_count_) + " vs " +
                                                  std::to_string(r.var_count_) + " variables");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = checked_mul(c, -1);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& r) {
  require_same(r, "add");
  for (const auto& [e, c] : r.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& r) {
  require_same(r, "subtract");
  for (const auto& [e, c] : r.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& r) { return *this = *this * r; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.require_same(b, "multiply");
  LaurentPoly out(a.var_count_);
  Exponent e(a.var_count_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, checked_mul(ca, cb));
    }
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const {
  if (shift.size() != var_count_) throw Error(ErrorKind::DimensionMismatch, "shift length");
  LaurentPoly out(var_count_);
  for (const auto& [e, c] : terms_) {
    Exponent s = e;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += shift[i];
    out.terms_.emplace_hint(out.terms_.end(), std::move(s), c);
  }
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly out = constant(var_count_, 1);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::string LaurentPoly::to_string(const std::string& prefix) const {
  if (terms_.empty()) return "0";
  // Graded descending: higher total degree first, ties by descending lex.
  std::vector<std::pair<Exponent, Coeff>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    const int dx = std::accumulate(x.first.begin(), x.first.end(), 0);
    const int dy = std::accumulate(y.first.begin(), y.first.end(), 0);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    const bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    Coeff mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool need_star = false;
    if (mag != 1 || is_const) {
      os << mag;
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << (need_star ? "*" : "") << prefix << (i + 1);
      if (e[i] != 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& r) { return p + r; }

LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& r) { return p * r; }

LaurentPoly lp_div_exact(const LaurentPoly& p, const LaurentPoly& r) {
  if (p.var_count() != r.var_count()) throw Error(ErrorKind::DimensionMismatch, "lp_div_exact");
  if (r.is_zero()) throw Error(ErrorKind::NotDivisible, "division by zero polynomial");
  const std::size_t n = p.var_count();
  if (p.is_zero()) return LaurentPoly(n);

  // r = x^content * core with core a polynomial divisible by no variable.
  const Exponent content = r.min_exponents();
  Exponent neg_content(n);
  for (std::size_t i = 0; i < n; ++i) neg_content[i] = -content[i];
  const LaurentPoly core = r.shifted(neg_content);

  // Clear p's denominators so the division runs on genuine polynomials.
  const Exponent p_min = p.min_exponents();
  Exponent lift(n);
  for (std::size_t i = 0; i < n; ++i) lift[i] = std::max(0, -p_min[i]);
  LaurentPoly remainder = p.shifted(lift);

  const auto& [lead_e, lead_c] = *core.terms().rbegin();
  LaurentPoly quotient(n);
  Exponent qe(n);
  while (!remainder.is_zero()) {
    const auto& [re, rc] = *remainder.terms().rbegin();
    bool divisible = rc % lead_c == 0;
    for (std::size_t i = 0; i < n && divisible; ++i) {
      qe[i] = re[i] - lead_e[i];
      divisible = qe[i] >= 0;
    }
    if (!divisible) throw Error(ErrorKind::NotDivisible, "leading term does not divide");
    const LaurentPoly step = LaurentPoly::monomial(qe, rc / lead_c);
    quotient += step;
    remainder -= step * core;
  }
  for (std::size_t i = 0; i < n; ++i) lift[i] = -lift[i] - content[i];
  return quotient.shifted(lift);
}

LaurentPoly lp_substitute(const LaurentPoly& p, std::span<const LaurentPoly> images) {
  if (images.size() != p.var_count())
    throw Error(ErrorKind::DimensionMismatch, "lp_substitute: need one image per variable");
  if (images.empty()) return p;
  const std::size_t m = images.front().var_count();
  for (const auto& img : images)
    if (img.var_count() != m) throw Error(ErrorKind::DimensionMismatch, "lp_substitute: image rings differ");

  // Inverses exist only for monomial images.
  auto power = [&](std::size_t var, int k) {
    const LaurentPoly& img = images[var];
    if (k >= 0) return img.pow(static_cast<unsigned>(k));
    if (!img.is_monomial())
      throw Error(ErrorKind::NegativeExponentOnNonMonomial, "variable " + std::to_string(var + 1));
    const auto& [e, c] = *img.terms().begin();
    if (c != 1 && c != -1)
      throw Error(ErrorKind::NegativeExponentOnNonMonomial, "image coefficient is not a unit");
    Exponent inv(m);
    for (std::size_t i = 0; i < m; ++i) inv[i] = -e[i];
    return LaurentPoly::monomial(inv, c).pow(static_cast<unsigned>(-k));
  };

  LaurentPoly out(m);
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly term = LaurentPoly::constant(m, c);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] != 0) term = term * power(v, e[v]);
    out += term;
  }
  return out;
}

LaurentPoly lp_rename(const LaurentPoly& p, std::span<const std::size_t> target, std::size_t target_var_count) {
  if (target.size() != p.var_count()) throw Error(ErrorKind::DimensionMismatch, "lp_rename");
  LaurentPoly out(target_var_count);
  Exponent e(target_var_count);
  for (const auto& [src, c] : p.terms()) {
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (target[i] >= target_var_count) throw Error(ErrorKind::IndexOutOfRange, "lp_rename target");
      e[target[i]] += src[i];
    }
    out.add_term(e, c);
  }
  return out;
}

std::string canonical_key(const LaurentPoly& p) {
  std::ostringstream os;
  for (const auto& [e, c] : p.terms()) {
    os << c << ':';
    for (int x : e) os << x << ',';
    os << ';';
  }
  return os.str();
}

}  // namespace clusterf
