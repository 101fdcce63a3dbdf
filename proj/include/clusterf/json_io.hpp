#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "clusterf/exchange.hpp"
#include "clusterf/folding.hpp"
#include "clusterf/laurent.hpp"
#include "clusterf/oracle.hpp"
#include "clusterf/polygon.hpp"
#include "clusterf/quantum.hpp"

namespace clusterf {

using Json = nlohmann::ordered_json;

/// {"vars": n, "terms": [{"e": [...], "coeff": c}, ...]} sorted by e.
Json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

/// {"v": [[v_exp, c], ...]} sorted by v_exp.
Json qcoeff_to_json(const QCoefficient& c);
Json quantum_to_json(const QuantumTorusElement& x);

Json matrix_to_json(const IntMatrix& b);
Json vector_to_json(const RootVector& v);

/// Array of {"d", "g", "F", "path"} sorted by d; path entries are 1-based.
Json table_to_json(const ClusterTable& t);

Json diagonal_set_to_json(const DiagonalSet& s);
Json folding_report_to_json(const FoldingReport& r);

/// Validated exchange matrix in canonical labels.
struct ParsedInput {
  IntMatrix original;
  IntMatrix matrix;
  Classification classification;
};

/// Accepts {"matrix": [[...]]} or {"cartan_type": "B", "rank": 4, "arrows": [[1,2], ...]}
/// with 1-based arrows. Throws Error on any invalid input.
ParsedInput parse_input(const Json& j);
ParsedInput parse_input_text(const std::string& text);

/// "0,1,1,0" -> (0,1,1,0).
RootVector parse_root_list(const std::string& s);

}  // namespace clusterf
