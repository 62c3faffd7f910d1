#include "bihom/structure_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace bihom {

using nlohmann::json;

namespace {

Rational parse_rational(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError(where + ": expected a rational string such as \"-3/2\"");
}

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

void expect_array(const json& j, std::size_t len, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  if (j.size() != len)
    throw ParseError(where + ": expected " + std::to_string(len) + " elements, found " + std::to_string(j.size()));
}

Vec parse_vec(const json& j, std::size_t n, const std::string& where) {
  expect_array(j, n, where);
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(parse_rational(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

Matrix parse_matrix(const json& j, std::size_t n, const std::string& where) {
  expect_array(j, n, where);
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Vec row = parse_vec(j[r], n, where + "[" + std::to_string(r) + "]");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = row[c];
  }
  return m;
}

Tensor3 parse_tensor(const json& j, std::size_t n, const std::string& where) {
  expect_array(j, n, where);
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string wi = where + "[" + std::to_string(i) + "]";
    expect_array(j[i], n, wi);
    for (std::size_t k = 0; k < n; ++k) {
      const Vec v = parse_vec(j[i][k], n, wi + "[" + std::to_string(k) + "]");
      for (std::size_t l = 0; l < n; ++l) t(i, k, l) = v[l];
    }
  }
  return t;
}

json tensor_json(const Tensor3& t) {
  const std::size_t n = t.dim();
  json out = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json a = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      json b = json::array();
      for (std::size_t k = 0; k < n; ++k) b.push_back(t(i, j, k).str());
      a.push_back(b);
    }
    out.push_back(a);
  }
  return out;
}

json header(const std::string& kind, std::size_t dim, const std::string& label) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  j["dim"] = dim;
  if (!label.empty()) j["label"] = label;
  return j;
}

void put_algebra(json& j, const BiHomAlgebra& a) {
  j["mul"] = tensor_json(a.mul);
  j["alpha"] = matrix_json(a.alpha);
  j["beta"] = matrix_json(a.beta);
  if (a.unit) j["unit"] = vec_json(*a.unit);
}

void put_coalgebra(json& j, const BiHomCoalgebra& c) {
  j["comul"] = tensor_json(c.comul);
  j["psi"] = matrix_json(c.psi);
  j["omega"] = matrix_json(c.omega);
  if (c.counit) j["counit"] = vec_json(*c.counit);
}

}  // namespace

BiHomBialgebra StructureFile::bialgebra() const {
  if (!algebra || !coalgebra) throw ParseError("structure file does not describe a bialgebra");
  return {*algebra, *coalgebra};
}

StructureFile parse_structure(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError("top level: expected an object");
  const json& ver = field(j, "schema_version");
  if (!ver.is_number_integer() || ver.get<int>() != kSchemaVersion)
    throw ParseError("schema_version: expected " + std::to_string(kSchemaVersion));
  const json& kind_j = field(j, "kind");
  if (!kind_j.is_string()) throw ParseError("kind: expected a string");
  StructureFile f;
  f.kind = kind_j.get<std::string>();
  std::set<std::string> allowed = {"schema_version", "kind", "dim", "label"};
  const bool alg = f.kind == "algebra" || f.kind == "bialgebra";
  const bool coa = f.kind == "coalgebra" || f.kind == "bialgebra";
  if (!alg && !coa) throw ParseError("kind: expected algebra, coalgebra or bialgebra, found '" + f.kind + "'");
  const json& dim_j = field(j, "dim");
  if (!dim_j.is_number_integer() || dim_j.get<long>() < 0) throw ParseError("dim: expected a non-negative integer");
  const auto n = static_cast<std::size_t>(dim_j.get<long>());
  std::string label;
  if (auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) throw ParseError("label: expected a string");
    label = it->get<std::string>();
  }
  if (alg) {
    allowed.insert({"mul", "alpha", "beta", "unit"});
    BiHomAlgebra a;
    a.dim = n;
    a.mul = parse_tensor(field(j, "mul"), n, "mul");
    a.alpha = parse_matrix(field(j, "alpha"), n, "alpha");
    a.beta = parse_matrix(field(j, "beta"), n, "beta");
    if (auto it = j.find("unit"); it != j.end() && !it->is_null()) a.unit = parse_vec(*it, n, "unit");
    a.label = label;
    f.algebra = std::move(a);
  }
  if (coa) {
    allowed.insert({"comul", "psi", "omega", "counit"});
    BiHomCoalgebra c;
    c.dim = n;
    c.comul = parse_tensor(field(j, "comul"), n, "comul");
    c.psi = parse_matrix(field(j, "psi"), n, "psi");
    c.omega = parse_matrix(field(j, "omega"), n, "omega");
    if (auto it = j.find("counit"); it != j.end() && !it->is_null()) c.counit = parse_vec(*it, n, "counit");
    c.label = label;
    f.coalgebra = std::move(c);
  }
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw ParseError("unexpected field '" + key + "'");
  return f;
}

StructureFile read_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_structure(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json to_json(const BiHomAlgebra& a) {
  json j = header("algebra", a.dim, a.label);
  put_algebra(j, a);
  return j;
}

json to_json(const BiHomCoalgebra& c) {
  json j = header("coalgebra", c.dim, c.label);
  put_coalgebra(j, c);
  return j;
}

json to_json(const BiHomBialgebra& b) {
  json j = header("bialgebra", b.dim(), b.alg.label.empty() ? b.coa.label : b.alg.label);
  put_algebra(j, b.alg);
  put_coalgebra(j, b.coa);
  return j;
}

std::string write_structure(const json& j) { return j.dump(2) + "\n"; }

json vec_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec_json(m.row(r)));
  return out;
}

json poly_json(const MultiPoly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({{"exps", it->first}, {"coeff", it->second.str()}});
  return {{"variables", p.variables()}, {"terms", terms}};
}

json ideal_json(const Ideal& i) {
  json gens = json::array();
  for (std::size_t g = 0; g < i.generators.size(); ++g) {
    json pj = poly_json(i.generators[g]);
    pj["label"] = i.labels[g];
    pj["text"] = i.generators[g].str();
    gens.push_back(pj);
  }
  return {{"variables", i.variables}, {"order", order_name(i.order)}, {"generators", gens}};
}

json basis_json(const GroebnerBasis& g) {
  json polys = json::array();
  for (const auto& p : g.basis) {
    json pj = poly_json(p);
    pj["text"] = p.str();
    polys.push_back(pj);
  }
  return {{"variables", g.variables}, {"order", order_name(g.order)}, {"basis", polys}, {"trivial", ideal_is_trivial(g)}};
}

json identity_json(const IdentityCheck& c) {
  if (c.holds) return {{"holds", true}};
  json at = json::array();
  for (auto i : c.at) at.push_back(i + 1);
  return {{"holds", false}, {"at", at}, {"lhs", vec_json(c.lhs)}, {"rhs", vec_json(c.rhs)}};
}

std::string unit_status_name(UnitStatus s) {
  switch (s) {
    case UnitStatus::pass: return "pass";
    case UnitStatus::fail: return "fail";
    case UnitStatus::not_applicable: return "not-applicable";
  }
  return "not-applicable";
}

std::string antipode_status_name(AntipodeResult::Status s) {
  switch (s) {
    case AntipodeResult::Status::found: return "found";
    case AntipodeResult::Status::none: return "none";
    case AntipodeResult::Status::not_applicable: return "not-applicable";
  }
  return "not-applicable";
}

json axioms_json(const AxiomReport& r) {
  json j = {{"passes", r.passes()},
            {"bihom_associative", identity_json(r.bihom_associative)},
            {"alpha_multiplicative", identity_json(r.alpha_multiplicative)},
            {"beta_multiplicative", identity_json(r.beta_multiplicative)},
            {"twists_commute", identity_json(r.twists_commute)},
            {"unit_laws", unit_status_name(r.unit_laws)}};
  if (r.unit_laws == UnitStatus::fail) {
    j["unit_law"] = r.unit_law;
    j["unit_witness"] = identity_json(r.unit_witness);
  }
  return j;
}

json coalgebra_json(const CoalgebraReport& r, const CounitReport& counit) {
  json j = {{"passes", r.passes()},
            {"twists_commute", identity_json(r.twists_commute)},
            {"psi_comultiplicative", identity_json(r.psi_comultiplicative)},
            {"omega_comultiplicative", identity_json(r.omega_comultiplicative)},
            {"coassociative", identity_json(r.coassociative)},
            {"counit", unit_status_name(counit.status)}};
  if (counit.status == UnitStatus::fail) {
    j["counit_law"] = counit.law;
    j["counit_witness"] = identity_json(counit.witness);
  }
  return j;
}

json compatibility_json(const CompatibilityReport& r) {
  json j = {{"passes", r.passes()},
            {"algebra", axioms_json(r.algebra)},
            {"coalgebra", coalgebra_json(r.coalgebra, r.counit)},
            {"comul_multiplicative", identity_json(r.comul_multiplicative)},
            {"alpha_psi_commute", identity_json(r.alpha_psi_commute)},
            {"alpha_omega_commute", identity_json(r.alpha_omega_commute)},
            {"beta_psi_commute", identity_json(r.beta_psi_commute)},
            {"beta_omega_commute", identity_json(r.beta_omega_commute)},
            {"alpha_comultiplicative", identity_json(r.alpha_comultiplicative)},
            {"beta_comultiplicative", identity_json(r.beta_comultiplicative)},
            {"psi_multiplicative", identity_json(r.psi_multiplicative)},
            {"omega_multiplicative", identity_json(r.omega_multiplicative)},
            {"unit_counit", unit_status_name(r.unit_counit)}};
  if (r.unit_counit == UnitStatus::fail) {
    j["unit_counit_law"] = r.unit_counit_law;
    j["unit_counit_witness"] = identity_json(r.unit_counit_witness);
  }
  if (auto f = r.first_failure()) j["first_failure"] = *f;
  return j;
}

json antipode_json(const AntipodeResult& r) {
  json j = {{"status", antipode_status_name(r.status)}};
  if (r.antipode) {
    j["antipode"] = matrix_json(*r.antipode);
    j["solution_space_dim"] = r.solution_space_dim;
  }
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

json fingerprint_json(const Fingerprint& f) {
  json j = json::object();
  for (const auto& [k, v] : f.fields()) j[k] = v;
  return j;
}

json iso_json(const IsoVerdict& v) {
  json j = {{"status", status_name(v.status)}, {"method", v.method}};
  if (v.witness) j["witness"] = matrix_json(*v.witness);
  if (v.invariant)
    j["certificate"] = {{"field", v.invariant->field}, {"a", v.invariant->value_a}, {"b", v.invariant->value_b}};
  if (v.constant) j["constant"] = v.constant->str();
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

}  // namespace bihom
