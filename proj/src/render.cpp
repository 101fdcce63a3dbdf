#include "clusterf/render.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

#include "clusterf/error.hpp"

namespace clusterf {

Format format_from_string(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "text") return Format::Text;
  if (s == "latex") return Format::Latex;
  throw Error(ErrorKind::InvalidInput, "unknown format '" + s + "' (expected json, text or latex)");
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

/// Graded descending: total degree first, then reverse lexicographic.
template <typename Map>
std::vector<typename Map::const_iterator> display_order(const Map& terms) {
  std::vector<typename Map::const_iterator> out;
  for (auto it = terms.begin(); it != terms.end(); ++it) out.push_back(it);
  std::stable_sort(out.begin(), out.end(), [](auto x, auto y) {
    const int dx = std::accumulate(x->first.begin(), x->first.end(), 0);
    const int dy = std::accumulate(y->first.begin(), y->first.end(), 0);
    if (dx != dy) return dx > dy;
    return x->first > y->first;
  });
  return out;
}

bool is_zero_vector(const RootVector& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

std::string latex_monomial(const Exponent& e, const char* var) {
  std::ostringstream os;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    os << var << "_{" << i + 1 << '}';
    if (e[i] != 1) os << "^{" << e[i] << '}';
  }
  return os.str();
}

std::string latex_q_power(int v_exp) {
  if (v_exp == 0) return "";
  if (v_exp == 2) return "q";
  if (v_exp % 2 == 0) return "q^{" + std::to_string(v_exp / 2) + "}";
  const std::string sign = v_exp < 0 ? "-" : "";
  return "q^{" + sign + "\\frac{" + std::to_string(std::abs(v_exp)) + "}{2}}";
}

std::string latex_polynomial(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it : display_order(p.terms())) {
    const auto& [e, c] = *it;
    const Coeff mag = c < 0 ? -c : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const std::string mono = latex_monomial(e, "u");
    if (mag != 1 || mono.empty()) os << mag;
    os << mono;
  }
  return os.str();
}

std::string quantum_monomial(const RootVector& a, Format f) {
  const auto nonzero = std::count_if(a.begin(), a.end(), [](int x) { return x != 0; });
  if (nonzero == 1) {
    const auto i = static_cast<std::size_t>(std::find_if(a.begin(), a.end(), [](int x) { return x != 0; }) - a.begin());
    if (a[i] == 1) return f == Format::Latex ? "Z_{" + std::to_string(i + 1) + "}" : "Z" + std::to_string(i + 1);
  }
  return f == Format::Latex ? "Z^{" + to_string(a) + "}" : "Z^" + to_string(a);
}

}  // namespace

std::string render_qcoefficient(const QCoefficient& c, Format f) {
  if (f == Format::Json) return qcoeff_to_json(c).dump();
  if (f == Format::Text) return c.to_string();
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, x] : c.terms()) {
    const Coeff mag = x < 0 ? -x : x;
    os << (first ? (x < 0 ? "-" : "") : (x < 0 ? " - " : " + "));
    first = false;
    const std::string q = latex_q_power(k);
    if (mag != 1 || q.empty()) os << mag;
    os << q;
  }
  return os.str();
}

std::string render_polynomial(const LaurentPoly& p, Format f) {
  switch (f) {
    case Format::Json: return dump_json(poly_to_json(p));
    case Format::Text: return p.to_string("u") + "\n";
    case Format::Latex: return latex_polynomial(p) + "\n";
  }
  return {};
}

std::string render_quantum(const QuantumTorusElement& x, Format f) {
  if (f == Format::Json) return dump_json(quantum_to_json(x));
  if (x.is_zero()) return "0\n";
  std::ostringstream os;
  bool first = true;
  for (auto it : display_order(x.terms())) {
    const auto& [a, c] = *it;
    const bool lead = first;
    os << (first ? "" : " + ");
    first = false;
    const std::string cs = render_qcoefficient(c, f);
    const bool unit = c == QCoefficient::one();
    const bool compound = c.terms().size() > 1 || (!c.terms().empty() && c.terms().begin()->second < 0);
    if (is_zero_vector(a)) {
      os << (compound && !lead ? "(" + cs + ")" : cs);
      continue;
    }
    if (!unit) {
      os << (compound ? "(" + cs + ")" : cs);
      if (f == Format::Text) os << '*';
    }
    os << quantum_monomial(a, f);
  }
  os << '\n';
  return os.str();
}

std::string render_vector(const RootVector& v, Format f) {
  if (f == Format::Json) return dump_json(vector_to_json(v));
  return to_string(v) + "\n";
}

std::string render_table(const ClusterTable& t, Format f) {
  if (f == Format::Json) return dump_json(table_to_json(t));
  std::ostringstream os;
  for (const auto& [d, rec] : t) {
    if (f == Format::Text) {
      os << "d=" << to_string(d) << "  g=" << to_string(rec.g) << "  F=" << rec.f.to_string("u") << "  path=";
      for (std::size_t i = 0; i < rec.path.size(); ++i) os << (i ? "," : "") << rec.path[i] + 1;
      os << '\n';
    } else {
      os << "F_{" << to_string(d) << "} &= " << latex_polynomial(rec.f) << ", \\quad \\mathbf{g} = " << to_string(rec.g)
         << " \\\\\n";
    }
  }
  return os.str();
}

}  // namespace clusterf
