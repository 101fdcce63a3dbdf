#pragma once

#include <string>

#include "clusterf/json_io.hpp"

namespace clusterf {

enum class Format { Json, Text, Latex };

/// "json", "text" or "latex"; throws InvalidInput otherwise.
Format format_from_string(const std::string& s);

std::string render_polynomial(const LaurentPoly& p, Format f);
std::string render_qcoefficient(const QCoefficient& c, Format f);
std::string render_quantum(const QuantumTorusElement& x, Format f);
std::string render_vector(const RootVector& v, Format f);
std::string render_table(const ClusterTable& t, Format f);

/// Canonical JSON text: two-space indentation, fixed key order, trailing newline.
std::string dump_json(const Json& j);

}  // namespace clusterf
