#include "bihom/catalog.hpp"
#include "bihom/structure_io.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace bihom;
using nlohmann::json;
using fixture::vec;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_structure(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

json h2_3_json() {
  BiHomAlgebra a = fixture::h2_3();
  a.label = "H2_3";
  return to_json(a);
}

}  // namespace

TEST_CASE("every catalog structure round-trips through the file format") {
  for (const auto& e : load_catalog()) {
    if (e.algebra) {
      const StructureFile f = parse_structure(write_structure(to_json(*e.algebra)));
      REQUIRE(f.algebra.has_value());
      CHECK(*f.algebra == *e.algebra);
      CHECK(f.kind == "algebra");
    }
    if (e.coalgebra) {
      const StructureFile f = parse_structure(write_structure(to_json(*e.coalgebra)));
      REQUIRE(f.coalgebra.has_value());
      CHECK(*f.coalgebra == *e.coalgebra);
    }
    if (e.algebra && e.coalgebra && e.algebra->dim == e.coalgebra->dim) {
      const BiHomBialgebra b{*e.algebra, *e.coalgebra};
      const StructureFile f = parse_structure(write_structure(to_json(b)));
      CHECK(f.kind == "bialgebra");
      CHECK(f.bialgebra().alg == b.alg);
      CHECK(f.bialgebra().coa == b.coa);
    }
  }
}

TEST_CASE("write_structure is canonical") {
  const std::string text = write_structure(h2_3_json());
  CHECK(text.back() == '\n');
  CHECK(text.find("\"alpha\"") < text.find("\"beta\""));
  CHECK(text.find("\"beta\"") < text.find("\"mul\""));
  CHECK(write_structure(parse_structure(text).algebra ? to_json(*parse_structure(text).algebra) : json{}) == text);
}

TEST_CASE("rationals are written as strings and accepted as integers") {
  BiHomAlgebra a = fixture::h2_3();
  a.mul(1, 1, 1) = Rational(-3, 2);
  const json j = to_json(a);
  CHECK(j["mul"][1][1][1] == "-3/2");
  json k = h2_3_json();
  k["alpha"] = json::array({json::array({1, 0}), json::array({0, 1})});
  CHECK(parse_structure(k.dump()).algebra->alpha == Matrix::identity(2));
}

TEST_CASE("matrices are stored row by row with column i the image of e_i") {
  BiHomAlgebra a = BiHomAlgebra::zero(2);
  a.alpha = Matrix{{0, 1}, {0, 0}};  // alpha(e2) = e1
  const json j = to_json(a);
  CHECK(j["alpha"][0][1] == "1");
  CHECK(a.alpha.apply(vec({0, 1})) == vec({1, 0}));
}

TEST_CASE("parse errors name the offending location") {
  CHECK(parse_error("{").rfind("invalid JSON at byte", 0) == 0);
  CHECK(parse_error("[]") == "top level: expected an object");
  json j = h2_3_json();
  j.erase("schema_version");
  CHECK(parse_error(j.dump()) == "missing field 'schema_version'");
  j = h2_3_json();
  j["schema_version"] = 2;
  CHECK(parse_error(j.dump()) == "schema_version: expected 1");
  j = h2_3_json();
  j["kind"] = "ring";
  CHECK(parse_error(j.dump()) == "kind: expected algebra, coalgebra or bialgebra, found 'ring'");
  j = h2_3_json();
  j["dim"] = -1;
  CHECK(parse_error(j.dump()) == "dim: expected a non-negative integer");
  j = h2_3_json();
  j["mul"][1][0][1] = "1/0";
  CHECK(parse_error(j.dump()).rfind("mul[1][0][1]: ", 0) == 0);
  j = h2_3_json();
  j["alpha"][0] = json::array({"1"});
  CHECK(parse_error(j.dump()) == "alpha[0]: expected 2 elements, found 1");
  j = h2_3_json();
  j["beta"][1][1] = "x";
  CHECK(parse_error(j.dump()).rfind("beta[1][1]: ", 0) == 0);
  j = h2_3_json();
  j["beta"][1][1] = 0.5;
  CHECK(parse_error(j.dump()) == "beta[1][1]: expected a rational string such as \"-3/2\"");
  j = h2_3_json();
  j["comul"] = json::array();
  CHECK(parse_error(j.dump()) == "unexpected field 'comul'");
  j = h2_3_json();
  j.erase("mul");
  CHECK(parse_error(j.dump()) == "missing field 'mul'");
  j = h2_3_json();
  j["unit"] = json::array({"1"});
  CHECK(parse_error(j.dump()) == "unit: expected 2 elements, found 1");
}

TEST_CASE("missing files are parse errors") {
  CHECK_THROWS_AS(read_structure_file("/nonexistent/structure.json"), ParseError);
  CHECK_THROWS_AS(parse_structure(h2_3_json().dump()).bialgebra(), ParseError);
}

TEST_CASE("report serialisation") {
  const json a = axioms_json(check_axioms(fixture::h2_1()));
  CHECK(a["bihom_associative"]["holds"] == false);
  CHECK(a["bihom_associative"]["at"] == json::array({1, 1, 1}));
  const json f = fingerprint_json(fingerprint(fixture::h2_3()));
  CHECK(f["mul_rank"] == "2");
  CHECK(unit_status_name(UnitStatus::not_applicable) == "not-applicable");
}
