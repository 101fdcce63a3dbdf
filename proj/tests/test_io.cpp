#include <doctest.h>

#include "clusterf/error.hpp"
#include "clusterf/json_io.hpp"
#include "clusterf/render.hpp"
#include "support.hpp"

using namespace clusterf;

namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    (void)parse_input_text(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("input was accepted: " << text);
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("parse_input with arrows") {
  const ParsedInput p = parse_input_text(R"({"cartan_type":"B","rank":4,"arrows":[[1,2],[3,2],[3,4]]})");
  CHECK(p.matrix == testdata::kB4);
  CHECK(p.classification.type == CartanType{CartanFamily::B, 4});
  CHECK(p.classification.is_identity());
}

TEST_CASE("parse_input with a matrix") {
  const ParsedInput p = parse_input(Json::parse(R"({"matrix":[[0,-1],[1,0]]})"));
  CHECK(p.classification.type == CartanType{CartanFamily::A, 2});
  CHECK(p.original == IntMatrix{{0, -1}, {1, 0}});
}

TEST_CASE("parse_input rejects bad input") {
  CHECK_THROWS_AS(parse_input_text(R"({"cartan_type":"B","rank":4,"arrows":[[1,2],[3,2]]})"), Error);
  CHECK(kind_of("not json") == ErrorKind::InvalidInput);
  CHECK(kind_of("[1,2]") == ErrorKind::InvalidInput);
  CHECK(kind_of(R"({"rank":3})") == ErrorKind::InvalidInput);
  CHECK(kind_of(R"({"matrix":[[0,1]]})") == ErrorKind::DimensionMismatch);
  CHECK(kind_of(R"({"matrix":[]})") == ErrorKind::InvalidInput);
  CHECK(kind_of(R"({"cartan_type":"B","rank":4,"arrows":[[0,1],[3,2],[3,4]]})") == ErrorKind::InvalidInput);
  CHECK(kind_of(R"({"cartan_type":"BB","rank":4,"arrows":[]})") == ErrorKind::InvalidInput);
  CHECK(kind_of(R"({"cartan_type":"B","rank":"four","arrows":[]})") == ErrorKind::InvalidInput);
  CHECK_THROWS_AS(parse_input_text(R"({"matrix":[[0,1],[1,0]]})"), Error);
}

TEST_CASE("parse_root_list") {
  CHECK(parse_root_list("0,1,1,0") == RootVector{0, 1, 1, 0});
  CHECK(parse_root_list("2") == RootVector{2});
  CHECK(parse_root_list("-1, 2") == RootVector{-1, 2});
  CHECK_THROWS_AS(parse_root_list(""), Error);
  CHECK_THROWS_AS(parse_root_list("1,x"), Error);
  CHECK_THROWS_AS(parse_root_list("1,2a"), Error);
}

TEST_CASE("polynomial JSON round trip") {
  const auto golden = testdata::b4_classical().back();
  const LaurentPoly f = testdata::to_poly(golden);
  const Json j = poly_to_json(f);
  CHECK(j.at("vars") == 4);
  CHECK(j.at("terms").size() == 24);
  CHECK(poly_from_json(j) == f);
  CHECK(dump_json(j) == dump_json(poly_to_json(f)));
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"terms":[]})")), Error);
}

TEST_CASE("q-coefficient JSON") {
  QCoefficient c;
  c.add_term(6, 1);
  c.add_term(10, 1);
  CHECK(qcoeff_to_json(c).dump() == R"({"v":[[6,1],[10,1]]})");
  CHECK(render_qcoefficient(c, Format::Json) == R"({"v":[[6,1],[10,1]]})");
  CHECK(render_qcoefficient(c, Format::Text) == "q^3 + q^5");
  CHECK(render_qcoefficient(c, Format::Latex) == "q^{3} + q^{5}");
  CHECK(render_qcoefficient(QCoefficient::v_power(-1), Format::Latex) == "q^{-\\frac{1}{2}}");
}

TEST_CASE("text and latex rendering") {
  LaurentPoly f(4);
  f.add_term({0, 1, 1, 0}, 1);
  f.add_term({0, 1, 0, 0}, 1);
  f.add_term({0, 0, 0, 0}, 1);
  CHECK(render_polynomial(f, Format::Text) == "u2*u3 + u2 + 1\n");
  CHECK(render_polynomial(f, Format::Latex) == "u_{2}u_{3} + u_{2} + 1\n");
  LaurentPoly g(2);
  g.add_term({2, 0}, 3);
  CHECK(render_polynomial(g, Format::Latex) == "3u_{1}^{2}\n");
}

TEST_CASE("quantum rendering") {
  const auto alg = std::make_shared<const SkewPairing>(testdata::kB4, SkewSymmetrizer{{4, 4, 4, 2}});
  QCoefficient c;
  for (int k : {3, 5}) c.add_term(2 * k, 1);
  const auto x = QuantumTorusElement::monomial(alg, {0, 1, 0, 1}, c) +
                 QuantumTorusElement::monomial(alg, {0, 1, 0, 0}, QCoefficient::v_power(2)) +
                 QuantumTorusElement::one(alg);
  CHECK(render_quantum(x, Format::Text) == "(q^3 + q^5)*Z^(0,1,0,1) + q*Z2 + 1\n");
  CHECK(render_quantum(QuantumTorusElement(alg), Format::Text) == "0\n");
  const Json j = quantum_to_json(x);
  CHECK(j.at("terms").size() == 3);
  CHECK(j.at("terms")[0].at("coeff").dump() == R"({"v":[[0,1]]})");
}

TEST_CASE("tables and formats") {
  CHECK(render_table(ClusterTable{}, Format::Json) == "[]\n");
  CHECK(format_from_string("latex") == Format::Latex);
  CHECK(format_from_string("json") == Format::Json);
  try {
    (void)format_from_string("yaml");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }

  const ClusterTable t = enumerate_finite_type(IntMatrix{{0, -1}, {1, 0}});
  const Json j = table_to_json(t);
  REQUIRE(j.size() == 3);
  CHECK(j[0].at("d") == Json::array({0, 1}));
  for (const auto& row : j)
    for (const auto& k : row.at("path")) CHECK(k.get<int>() >= 1);
  CHECK(render_table(t, Format::Json) == render_table(enumerate_finite_type(IntMatrix{{0, -1}, {1, 0}}), Format::Json));
}
