#include "bihom/catalog.hpp"

#include "bihom/enumerate.hpp"
#include "bihom/invariants.hpp"
#include "bihom/structure_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace bihom {

using nlohmann::json;

namespace {

std::string basis_tuple(const std::vector<std::size_t>& at) {
  std::string s = "(";
  for (std::size_t i = 0; i < at.size(); ++i) {
    if (i) s += ",";
    s += "e" + std::to_string(at[i] + 1);
  }
  return s + ")";
}

std::string index_tuple(const std::vector<std::size_t>& at) {
  std::string s = "(";
  for (std::size_t i = 0; i < at.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(at[i] + 1);
  }
  return s + ")";
}

std::string failure_text(const std::string& name, const IdentityCheck& c, bool matrix_entry = false) {
  return name + " fails at " + (matrix_entry ? "entry " + index_tuple(c.at) : basis_tuple(c.at)) +
         ": lhs " + vec_str(c.lhs) + ", rhs " + vec_str(c.rhs);
}

std::string describe_axioms(const AxiomReport& r) {
  if (!r.bihom_associative.holds) return failure_text("bihom_associative", r.bihom_associative);
  if (!r.alpha_multiplicative.holds) return failure_text("alpha_multiplicative", r.alpha_multiplicative);
  if (!r.beta_multiplicative.holds) return failure_text("beta_multiplicative", r.beta_multiplicative);
  if (!r.twists_commute.holds) return failure_text("twists_commute", r.twists_commute, true);
  if (r.unit_laws == UnitStatus::fail) return failure_text("unit law " + r.unit_law, r.unit_witness);
  return "passes";
}

std::string describe_coalgebra(const CoalgebraReport& r, const CounitReport& counit) {
  if (!r.coassociative.holds) return failure_text("coassociative", r.coassociative);
  if (!r.psi_comultiplicative.holds) return failure_text("psi_comultiplicative", r.psi_comultiplicative);
  if (!r.omega_comultiplicative.holds) return failure_text("omega_comultiplicative", r.omega_comultiplicative);
  if (!r.twists_commute.holds) return failure_text("twists_commute", r.twists_commute, true);
  if (counit.status == UnitStatus::fail) return failure_text("counit law " + counit.law, counit.witness);
  return "passes";
}

std::string describe_iso(const IsoVerdict& v) {
  std::string s = status_name(v.status) + " (" + v.method + ")";
  if (v.witness) s += " witness " + v.witness->str();
  if (v.invariant) s += ": " + v.invariant->field + " " + v.invariant->value_a + " vs " + v.invariant->value_b;
  if (v.constant) s += ": constant " + v.constant->str() + " in the basis";
  if (!v.reason.empty()) s += ": " + v.reason;
  return s;
}

BiHomBialgebra reading_bialgebra(const Catalog& c, const Reading& r) {
  return {*find_entry(c, r.algebra).algebra, *find_entry(c, r.comultiplication).coalgebra};
}

std::string describe_compatibility(const Catalog& c, const std::vector<Reading>& readings) {
  std::string s;
  for (const auto& r : readings) {
    const CompatibilityReport rep = check_compatibility(reading_bialgebra(c, r));
    if (!s.empty()) s += "; ";
    s += r.algebra + ": ";
    s += rep.passes() ? "bialgebra" : "fails " + rep.first_failure().value_or("?");
  }
  return s;
}

std::string describe_antipodes(const Catalog& c, const std::vector<Reading>& readings) {
  std::string s;
  for (const auto& r : readings) {
    const AntipodeResult res = solve_antipode(reading_bialgebra(c, r));
    if (!s.empty()) s += "; ";
    s += "(" + r.algebra + ", " + r.comultiplication + "): " + antipode_status_name(res.status);
    if (res.antipode) s += " S = " + res.antipode->str();
    if (!res.reason.empty()) s += " (" + res.reason + ")";
  }
  return s;
}

struct RemarkSearch {
  std::string algebra;
  bool counital = false;
  std::size_t sparsity = 0;
  std::vector<Rational> grid;
};

json grid_json(const std::vector<Rational>& grid) {
  json g = json::array();
  for (const auto& x : grid) g.push_back(x.str());
  return g;
}

json search_inputs(const RemarkSearch& rs) {
  return {{"algebra", rs.algebra}, {"grid", grid_json(rs.grid)}, {"sparsity", rs.sparsity}, {"counital", rs.counital}};
}

struct SearchOutcome {
  std::size_t count = 0;
  std::optional<BiHomBialgebra> first;
  std::string first_twists;
};

SearchOutcome run_remark_search(const Catalog& c, const RemarkSearch& rs) {
  const BiHomAlgebra& a = *find_entry(c, rs.algebra).algebra;
  const std::vector<std::pair<std::string, Matrix>> maps = {
      {"id", Matrix::identity(a.dim)}, {"alpha", a.alpha}, {"beta", a.beta}};
  ComulSearchOptions opt;
  opt.grid = rs.grid;
  opt.sparsity = rs.sparsity;
  opt.counital = rs.counital;
  SearchOutcome out;
  std::vector<std::pair<Matrix, Matrix>> seen;
  for (const auto& [pn, psi] : maps)
    for (const auto& [on, omega] : maps) {
      bool dup = false;
      for (const auto& [p, o] : seen) dup = dup || (p == psi && o == omega);
      if (dup) continue;
      seen.push_back({psi, omega});
      for (auto& b : enumerate_comultiplications(a, psi, omega, opt)) {
        if (b.coa.comul.is_zero()) continue;
        if (!out.first) {
          out.first = b;
          out.first_twists = "psi=" + pn + ", omega=" + on;
        }
        ++out.count;
      }
    }
  return out;
}

std::string describe_search(const SearchOutcome& s) {
  if (s.count == 0) return "no nonzero comultiplication found";
  std::string d = std::to_string(s.count) + " nonzero comultiplications found; first with " + s.first_twists + ":";
  const std::size_t n = s.first->dim();
  for (std::size_t i = 0; i < n; ++i) {
    Vec v = eval_comul(s.first->coa, basis_vec(n, i));
    std::string terms;
    for (std::size_t jk = 0; jk < v.size(); ++jk) {
      if (v[jk].is_zero()) continue;
      std::string coef = v[jk].str();
      if (!terms.empty() && coef[0] != '-') terms += "+";
      if (coef == "1") coef.clear();
      if (coef == "-1") coef = "-";
      terms += coef + "e" + std::to_string(jk / n + 1) + "@e" + std::to_string(jk % n + 1);
    }
    d += " D(e" + std::to_string(i + 1) + ")=" + (terms.empty() ? "0" : terms);
  }
  if (s.first->coa.counit) d += " eps=" + vec_str(*s.first->coa.counit);
  return d;
}

std::vector<Reading> readings_from(const json& j) {
  std::vector<Reading> out;
  for (const auto& r : j) out.push_back({r.at(0).get<std::string>(), r.at(1).get<std::string>()});
  return out;
}

json readings_json(const std::vector<Reading>& rs) {
  json j = json::array();
  for (const auto& r : rs) j.push_back({r.algebra, r.comultiplication});
  return j;
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& remark_algebras() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> r = {
      {"Bialg2", {"H2_1"}},
      {"Bialg2Unital", {"Hu2_3"}},
      {"Bialg3", {"H3_3", "H3_5"}},
      {"Bialg3Unital", {"Hu3_1", "Hu3_5", "Hu3_7", "Hu3_8", "Hu3_10"}},
  };
  return r;
}

std::string theorem_claim(const std::string& theorem) {
  if (theorem == "Table1") return "listed as a multiplicative BiHom-associative algebra";
  if (theorem == "Table2") return "listed as a unital multiplicative BiHom-associative algebra with unit e1";
  if (theorem == "Dim3") return "listed as a BiHom-associative algebra";
  if (theorem == "Dim3Unital") return "listed as a unital BiHom-associative algebra";
  if (theorem == "Hopf2" || theorem == "Hopf3") return "listed as a BiHom-Hopf algebra";
  return "listed as a comultiplication giving a BiHom-bialgebra";
}

class Auditor {
public:
  Auditor(const Catalog& c, const AuditOptions& o, AuditReport& r) : c_(c), o_(o), r_(r) {}

  void entry(const CatalogEntry& e) {
    json j = {{"id", e.id}, {"kind", e.kind}, {"theorem", e.theorem}, {"source", e.source}, {"flags", e.flags}};
    if (e.algebra) {
      const AxiomReport rep = check_axioms(*e.algebra);
      j["axioms"] = axioms_json(rep);
      j["fingerprint"] = fingerprint_json(fingerprint(*e.algebra));
      const auto u = find_unit(*e.algebra);
      j["unit_found"] = u ? vec_json(*u) : json(nullptr);
      j["verdict"] = describe_axioms(rep);
      if (!rep.passes()) add(e.id, theorem_claim(e.theorem), describe_axioms(rep), "check_axioms", {{"entry", e.id}});
    } else if (e.coalgebra) {
      const CoalgebraReport rep = check_coalgebra_axioms(*e.coalgebra);
      const CounitReport cu = check_counit(*e.coalgebra);
      j["coalgebra"] = coalgebra_json(rep, cu);
      json rd = json::array();
      bool any = false;
      for (const auto& r : e.readings) {
        const CompatibilityReport cr = check_compatibility(reading_bialgebra(c_, r));
        json x = {{"algebra", r.algebra}, {"passes", cr.passes()}};
        if (auto f = cr.first_failure()) x["first_failure"] = *f;
        any = any || cr.passes();
        rd.push_back(x);
      }
      j["readings"] = rd;
      const std::string cverdict = describe_coalgebra(rep, cu);
      j["verdict"] = any ? "bialgebra under some reading" : "no reading gives a bialgebra";
      if (cverdict != "passes") {
        add(e.id, "listed as a BiHom-coalgebra structure", cverdict, "check_coalgebra", {{"entry", e.id}});
      } else if (!any) {
        add(e.id, theorem_claim(e.theorem), describe_compatibility(c_, e.readings), "check_compatibility",
            {{"readings", readings_json(e.readings)}});
      }
    } else {
      json rd = json::array();
      bool found = false;
      for (const auto& r : e.readings) {
        const AntipodeResult res = solve_antipode(reading_bialgebra(c_, r));
        json x = antipode_json(res);
        x["algebra"] = r.algebra;
        x["comultiplication"] = r.comultiplication;
        found = found || res.status == AntipodeResult::Status::found;
        rd.push_back(x);
      }
      j["readings"] = rd;
      j["verdict"] = found ? "found" : "none";
      if (!found)
        add(e.id, theorem_claim(e.theorem), describe_antipodes(c_, e.readings), "solve_antipode",
            {{"readings", readings_json(e.readings)}});
    }
    r_.entries.push_back(j);
  }

  void pairwise(const std::string& theorem) {
    std::vector<const CatalogEntry*> members;
    for (const auto& e : c_)
      if (e.theorem == theorem && e.algebra) members.push_back(&e);
    json pairs = json::array();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t k = i + 1; k < members.size(); ++k) {
        const IsoVerdict v = decide_isomorphic(*members[i]->algebra, *members[k]->algebra, o_.iso);
        json p = iso_json(v);
        p["a"] = members[i]->id;
        p["b"] = members[k]->id;
        pairs.push_back(p);
        if (v.status == IsoVerdict::Status::isomorphic)
          add(members[i]->id, "pairwise non-isomorphic to " + members[k]->id, describe_iso(v), "decide_isomorphic",
              {{"a", members[i]->id}, {"b", members[k]->id}});
      }
    if (members.empty()) return;
    r_.pairwise.push_back({{"theorem", theorem}, {"pairs", pairs}});
  }

  void remarks(const std::string& theorem) {
    for (const auto& [t, algebras] : remark_algebras()) {
      if (t != theorem) continue;
      for (const auto& id : algebras) {
        const RemarkSearch rs = remark_search(id);
        const SearchOutcome out = run_remark_search(c_, rs);
        json j = {{"theorem", t},
                  {"algebra", id},
                  {"claim", "no BiHom-bialgebra has this underlying algebra"},
                  {"search", search_inputs(rs)},
                  {"twists", "psi, omega each in {id, alpha, beta}"},
                  {"found", out.count},
                  {"result", describe_search(out)}};
        r_.remarks.push_back(j);
        if (out.count)
          add(id, "no BiHom-bialgebra has this underlying algebra", describe_search(out),
              "enumerate_comultiplications", search_inputs(rs));
      }
    }
  }

  RemarkSearch remark_search(const std::string& id) const {
    const CatalogEntry& e = find_entry(c_, id);
    return {id, e.kind == "unital-algebra", e.algebra->dim == 2 ? std::size_t{2} : std::size_t{1}, o_.remark_grid};
  }

private:
  void add(const std::string& id, const std::string& claim, const std::string& computed, const std::string& op,
           json inputs) {
    r_.discrepancies.push_back({id, claim, computed, op, std::move(inputs)});
  }

  const Catalog& c_;
  const AuditOptions& o_;
  AuditReport& r_;
};

bool has_pairwise(const std::string& theorem) {
  return theorem == "Table1" || theorem == "Table2" || theorem == "Dim3" || theorem == "Dim3Unital";
}

bool known_theorem(const std::string& t) {
  for (const auto& x : theorem_names())
    if (x == t) return true;
  return false;
}

json conventions_json() {
  return {
      {"zero_convention", "products, twist images, comultiplication terms and counit values not listed are zero"},
      {"mul", "mul[i][j] lists the coordinates of e_i * e_j"},
      {"comul", "comul[i][j][k] is the coefficient of e_j (x) e_k in Delta(e_i)"},
      {"matrices", "row-major; column i holds the coordinates of the image of e_i"},
      {"indices", "witness indices are 1-based"},
      {"parameters", "free parameters in listed data are instantiated at 1"},
  };
}

}  // namespace

AuditReport audit(const Catalog& c, const std::string& scope, const AuditOptions& options) {
  AuditReport r;
  r.scope = scope;
  r.budget = options.iso.groebner.max_steps;
  Auditor a(c, options, r);
  if (scope.empty()) return r;
  if (scope == "all") {
    for (const auto& e : c) a.entry(e);
    for (const auto& t : theorem_names())
      if (has_pairwise(t)) a.pairwise(t);
    for (const auto& t : theorem_names()) a.remarks(t);
    return r;
  }
  if (scope.rfind("pairwise:", 0) == 0) {
    const std::string t = scope.substr(9);
    if (!known_theorem(t)) throw CatalogError("unknown theorem '" + t + "'");
    a.pairwise(t);
    return r;
  }
  if (scope.rfind("theorem:", 0) == 0) {
    const std::string t = scope.substr(8);
    if (!known_theorem(t)) throw CatalogError("unknown theorem '" + t + "'");
    for (const auto& e : c)
      if (e.theorem == t) a.entry(e);
    a.remarks(t);
    return r;
  }
  if (const CatalogEntry* e = lookup_entry(c, scope)) {
    a.entry(*e);
    return r;
  }
  throw CatalogError("unknown audit scope '" + scope + "'");
}

std::string replay(const Catalog& c, const std::string& op, const json& inputs, const AuditOptions& options) {
  if (op == "check_axioms") return describe_axioms(check_axioms(*find_entry(c, inputs.at("entry")).algebra));
  if (op == "check_coalgebra") {
    const BiHomCoalgebra& co = *find_entry(c, inputs.at("entry")).coalgebra;
    return describe_coalgebra(check_coalgebra_axioms(co), check_counit(co));
  }
  if (op == "check_compatibility") return describe_compatibility(c, readings_from(inputs.at("readings")));
  if (op == "solve_antipode") return describe_antipodes(c, readings_from(inputs.at("readings")));
  if (op == "decide_isomorphic")
    return describe_iso(
        decide_isomorphic(*find_entry(c, inputs.at("a")).algebra, *find_entry(c, inputs.at("b")).algebra, options.iso));
  if (op == "enumerate_comultiplications") {
    RemarkSearch rs;
    rs.algebra = inputs.at("algebra");
    rs.counital = inputs.at("counital");
    rs.sparsity = inputs.at("sparsity");
    for (const auto& g : inputs.at("grid")) rs.grid.push_back(Rational::parse(g.get<std::string>()));
    return describe_search(run_remark_search(c, rs));
  }
  throw CatalogError("unknown replay operation '" + op + "'");
}

json report_json(const AuditReport& r) {
  json d = json::array();
  for (const auto& x : r.discrepancies)
    d.push_back({{"id", x.id}, {"claim", x.claim}, {"computed", x.computed}, {"replay", {{"op", x.op}, {"inputs", x.inputs}}}});
  return {{"schema_version", kSchemaVersion},
          {"conventions", conventions_json()},
          {"scope", r.scope},
          {"budget", r.budget},
          {"entries", r.entries},
          {"pairwise", r.pairwise},
          {"remarks", r.remarks},
          {"discrepancies", d},
          {"summary",
           {{"entries", r.entries.size()}, {"discrepancies", r.discrepancies.size()}, {"remarks", r.remarks.size()}}}};
}

std::string emit_report(const AuditReport& r, ReportFormat format) {
  if (format == ReportFormat::structured) return report_json(r).dump(2) + "\n";
  std::ostringstream os;
  os << "audit scope: " << (r.scope.empty() ? "(empty)" : r.scope) << "\n";
  os << "groebner budget: " << r.budget << " reduction steps\n";
  const json conventions = conventions_json();
  for (const auto& [k, v] : conventions.items()) os << "convention " << k << ": " << v.get<std::string>() << "\n";
  if (!r.entries.empty()) os << "\nentries\n";
  for (const auto& e : r.entries) os << "  " << e["id"].get<std::string>() << " [" << e["kind"].get<std::string>()
                                     << "] " << e["verdict"].get<std::string>() << "\n";
  for (const auto& t : r.pairwise) {
    os << "\npairwise isomorphism, " << t["theorem"].get<std::string>() << "\n";
    for (const auto& p : t["pairs"]) {
      const std::string st = p["status"];
      if (st == "not-isomorphic") continue;
      os << "  " << p["a"].get<std::string>() << " ~ " << p["b"].get<std::string>() << ": " << st << " ("
         << p["method"].get<std::string>() << ")\n";
    }
    std::size_t distinct = 0;
    for (const auto& p : t["pairs"])
      if (p["status"] == "not-isomorphic") ++distinct;
    os << "  " << distinct << " of " << t["pairs"].size() << " pairs certified non-isomorphic\n";
  }
  if (!r.remarks.empty()) os << "\nremarks\n";
  for (const auto& m : r.remarks)
    os << "  " << m["algebra"].get<std::string>() << ": " << m["result"].get<std::string>() << "\n";
  os << "\ndiscrepancies: " << r.discrepancies.size() << "\n";
  for (const auto& x : r.discrepancies) {
    os << "  " << x.id << ": claim: " << x.claim << "\n";
    os << "    computed: " << x.computed << "\n";
    os << "    replay: " << x.op << " " << x.inputs.dump() << "\n";
  }
  return os.str();
}

json catalog_index(const Catalog& c) {
  json entries = json::array();
  for (const auto& e : c) {
    json j = {{"id", e.id}, {"kind", e.kind}, {"theorem", e.theorem}, {"source", e.source}, {"flags", e.flags}};
    j["readings"] = readings_json(e.readings);
    j["file"] = (e.algebra || e.coalgebra) ? json(e.id + ".json") : json(nullptr);
    entries.push_back(j);
  }
  return {{"schema_version", kSchemaVersion}, {"entries", entries}};
}

void export_catalog(const Catalog& c, const std::string& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream out(std::filesystem::path(dir) / name, std::ios::binary);
    if (!out) throw CatalogError("cannot write " + name);
    out << text;
  };
  write("index.json", write_structure(catalog_index(c)));
  for (const auto& e : c) {
    if (e.algebra) write(e.id + ".json", write_structure(to_json(*e.algebra)));
    if (e.coalgebra) write(e.id + ".json", write_structure(to_json(*e.coalgebra)));
  }
}

Catalog load_catalog_files(const std::string& dir) {
  const auto base = std::filesystem::path(dir);
  json index;
  try {
    std::ifstream in(base / "index.json");
    if (!in) throw CatalogError("cannot open index.json");
    index = json::parse(in);
  } catch (const json::exception& e) {
    throw CatalogError(std::string("index.json: ") + e.what());
  }
  Catalog out;
  for (const auto& j : index.at("entries")) {
    CatalogEntry e;
    e.id = j.at("id");
    try {
      e.kind = j.at("kind");
      e.theorem = j.at("theorem");
      e.source = j.at("source");
      e.flags = j.at("flags").get<std::vector<std::string>>();
      e.readings = readings_from(j.at("readings"));
      if (!j.at("file").is_null()) {
        const StructureFile f = read_structure_file((base / j.at("file").get<std::string>()).string());
        if (e.kind == "comultiplication") {
          if (!f.coalgebra || f.algebra) throw CatalogError("expected a coalgebra file");
          e.coalgebra = f.coalgebra;
        } else {
          if (!f.algebra || f.coalgebra) throw CatalogError("expected an algebra file");
          e.algebra = f.algebra;
        }
      }
    } catch (const std::exception& ex) {
      throw CatalogError("catalog entry " + e.id + ": " + ex.what());
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace bihom
