#include "clusterf/json_io.hpp"

#include <sstream>

#include "clusterf/error.hpp"

namespace clusterf {

Json poly_to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"e", e}, {"coeff", c}});
  return {{"vars", p.var_count()}, {"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const Json& j) {
  try {
    LaurentPoly p(j.at("vars").get<std::size_t>());
    for (const auto& t : j.at("terms")) p.add_term(t.at("e").get<Exponent>(), t.at("coeff").get<Coeff>());
    return p;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("polynomial JSON: ") + e.what());
  }
}

Json qcoeff_to_json(const QCoefficient& c) {
  Json v = Json::array();
  for (const auto& [k, x] : c.terms()) v.push_back(Json::array({k, x}));
  return {{"v", std::move(v)}};
}

Json quantum_to_json(const QuantumTorusElement& x) {
  Json terms = Json::array();
  for (const auto& [a, c] : x.terms()) terms.push_back({{"e", a}, {"coeff", qcoeff_to_json(c)}});
  return {{"vars", x.dimension()}, {"terms", std::move(terms)}};
}

Json matrix_to_json(const IntMatrix& b) { return b.to_rows(); }

Json vector_to_json(const RootVector& v) { return v; }

Json table_to_json(const ClusterTable& t) {
  Json out = Json::array();
  for (const auto& [d, rec] : t) {
    std::vector<std::size_t> path;
    for (std::size_t k : rec.path) path.push_back(k + 1);
    out.push_back({{"d", d}, {"g", rec.g}, {"F", poly_to_json(rec.f)}, {"path", path}});
  }
  return out;
}

Json diagonal_set_to_json(const DiagonalSet& s) {
  Json ds = Json::array();
  for (const auto& d : s.diagonals()) ds.push_back(Json::array({d.a, d.b}));
  return {{"n", s.n}, {"type", std::string(1, family_letter(s.type))}, {"diagonals", std::move(ds)}};
}

Json folding_report_to_json(const FoldingReport& r) {
  Json roots = Json::array();
  for (const auto& x : r.roots)
    roots.push_back({{"dbar", x.dbar}, {"dprime", x.dprime}, {"f_match", x.f_match}, {"g_match", x.g_match}});
  return {{"type", r.type.name()},
          {"matrix", matrix_to_json(r.matrix)},
          {"unfolded_type", r.unfolded_type.name()},
          {"unfolded", matrix_to_json(r.unfolded)},
          {"round_trip", r.round_trip},
          {"roots", std::move(roots)}};
}

ParsedInput parse_input(const Json& j) {
  IntMatrix b;
  try {
    if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "input must be a JSON object");
    if (j.contains("matrix")) {
      const auto rows = j.at("matrix").get<std::vector<std::vector<int>>>();
      if (rows.empty()) throw Error(ErrorKind::InvalidInput, "matrix is empty");
      for (const auto& r : rows)
        if (r.size() != rows.size()) throw Error(ErrorKind::DimensionMismatch, "matrix must be square");
      b = IntMatrix::from_rows(rows);
    } else if (j.contains("cartan_type")) {
      const auto letter = j.at("cartan_type").get<std::string>();
      if (letter.size() != 1) throw Error(ErrorKind::InvalidInput, "cartan_type must be one of A, B, C, D");
      const CartanType t{family_from_letter(letter[0]), j.at("rank").get<std::size_t>()};
      validate_cartan_type(t);
      std::vector<std::pair<std::size_t, std::size_t>> arrows;
      for (const auto& a : j.at("arrows")) {
        const auto pair = a.get<std::vector<long long>>();
        if (pair.size() != 2 || pair[0] < 1 || pair[1] < 1 || pair[0] > static_cast<long long>(t.rank) ||
            pair[1] > static_cast<long long>(t.rank))
          throw Error(ErrorKind::InvalidInput, "arrow entries must be pairs of vertices in 1.." + std::to_string(t.rank));
        arrows.emplace_back(static_cast<std::size_t>(pair[0] - 1), static_cast<std::size_t>(pair[1] - 1));
      }
      b = matrix_from_arrows(t, arrows);
    } else {
      throw Error(ErrorKind::InvalidInput, "expected a \"matrix\" or \"cartan_type\" field");
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed input: ") + e.what());
  }
  ParsedInput out{b, b, classify_cartan_type(b)};
  if (!out.classification.is_identity()) out.matrix = relabel(b, out.classification.relabeling);
  return out;
}

ParsedInput parse_input_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("not valid JSON: ") + e.what());
  }
  return parse_input(j);
}

RootVector parse_root_list(const std::string& s) {
  RootVector out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "cannot parse root coordinate '" + item + "'");
    }
  }
  if (out.empty()) throw Error(ErrorKind::InvalidInput, "empty root");
  return out;
}

}  // namespace clusterf
