#include "bihom/catalog.hpp"
#include "bihom/enumerate.hpp"
#include "bihom/invariants.hpp"
#include "bihom/polysys.hpp"
#include "bihom/structure_io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace bihom;
using nlohmann::json;

namespace {

constexpr int kExitParse = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A positional input is a structure file path, or a catalog id when no such file exists.
StructureFile resolve(const std::string& spec, bool catalog_only = false) {
  if (!catalog_only && std::filesystem::exists(spec)) return read_structure_file(spec);
  const Catalog& c = load_catalog();
  const CatalogEntry* e = lookup_entry(c, spec);
  if (!e) {
    if (catalog_only) throw InputError("unknown catalog id '" + spec + "'");
    throw InputError(spec + ": no such file or catalog id");
  }
  StructureFile f;
  if (e->algebra) {
    f.kind = "algebra";
    f.algebra = e->algebra;
  } else if (e->coalgebra) {
    f.kind = "coalgebra";
    f.coalgebra = e->coalgebra;
  } else {
    const Reading& r = e->readings.front();
    f.kind = "bialgebra";
    f.algebra = find_entry(c, r.algebra).algebra;
    f.coalgebra = find_entry(c, r.comultiplication).coalgebra;
  }
  return f;
}

std::string join_at(const json& at) {
  std::string s = "(";
  for (std::size_t i = 0; i < at.size(); ++i) s += (i ? ",e" : "e") + std::to_string(at[i].get<int>());
  return s + ")";
}

std::string vec_text(const json& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get<std::string>();
  return s + "]";
}

// Line-oriented rendering of a report document.
void render(std::ostream& os, const json& j, const std::string& prefix) {
  for (const auto& [k, v] : j.items()) {
    const std::string name = prefix.empty() ? k : prefix + "." + k;
    if (v.is_object() && v.contains("holds")) {
      if (v["holds"].get<bool>())
        os << name << ": pass\n";
      else
        os << name << ": FAIL at " << join_at(v["at"]) << ": lhs " << vec_text(v["lhs"]) << ", rhs "
           << vec_text(v["rhs"]) << "\n";
    } else if (v.is_object()) {
      render(os, v, name);
    } else if (v.is_string()) {
      os << name << ": " << v.get<std::string>() << "\n";
    } else {
      os << name << ": " << v.dump() << "\n";
    }
  }
}

void emit(const json& j, const std::string& format) {
  if (format == "structured")
    std::cout << j.dump(2) << "\n";
  else
    render(std::cout, j, "");
}

std::vector<Rational> parse_grid(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const std::exception&) {
      throw InputError("--grid: '" + item + "' is not a rational number");
    }
  }
  if (out.empty()) throw InputError("--grid: empty");
  return out;
}

Matrix twist_named(const std::string& name, const BiHomAlgebra& a) {
  if (name == "id") return Matrix::identity(a.dim);
  if (name == "alpha") return a.alpha;
  if (name == "beta") return a.beta;
  throw InputError("twist must be id, alpha or beta, got '" + name + "'");
}

std::string describe_verdict(const IsoVerdict& v) {
  switch (v.status) {
    case IsoVerdict::Status::isomorphic:
      return "isomorphic (" + v.method + ")";
    case IsoVerdict::Status::not_isomorphic:
      if (v.invariant) return "not-isomorphic: " + v.invariant->field;
      return "not-isomorphic (" + v.method + ")";
    case IsoVerdict::Status::unknown:
      break;
  }
  return "unknown (" + v.method + ")";
}

int cmd_verify(const StructureFile& f, const std::string& format) {
  json j;
  bool ok = false;
  if (f.kind == "algebra") {
    const AxiomReport r = check_axioms(*f.algebra);
    j = axioms_json(r);
    ok = r.passes();
  } else if (f.kind == "coalgebra") {
    const CoalgebraReport r = check_coalgebra_axioms(*f.coalgebra);
    const CounitReport c = check_counit(*f.coalgebra);
    j = coalgebra_json(r, c);
    ok = r.passes() && c.status != UnitStatus::fail;
  } else {
    const CompatibilityReport r = check_compatibility(f.bialgebra());
    j = compatibility_json(r);
    ok = r.passes();
  }
  j = {{"kind", f.kind}, {"report", j}};
  emit(j, format);
  return ok ? 0 : 1;
}

const BiHomAlgebra& need_algebra(const StructureFile& f, const std::string& what) {
  if (!f.algebra) throw InputError(what + ": expected an algebra or bialgebra");
  return *f.algebra;
}

int cmd_iso(const StructureFile& fa, const StructureFile& fb, const IsoOptions& opt, const std::string& format) {
  const BiHomAlgebra& a = need_algebra(fa, "first input");
  const BiHomAlgebra& b = need_algebra(fb, "second input");
  if (a.dim != b.dim)
    throw InputError("dimension mismatch: " + std::to_string(a.dim) + " vs " + std::to_string(b.dim));
  const IsoVerdict v = decide_isomorphic(a, b, opt);
  if (format == "structured") {
    std::cout << iso_json(v).dump(2) << "\n";
  } else {
    std::cout << describe_verdict(v) << "\n";
    if (v.witness) std::cout << "witness: " << v.witness->str() << "\n";
    if (v.invariant) std::cout << "certificate: " << v.invariant->value_a << " vs " << v.invariant->value_b << "\n";
    if (v.constant) std::cout << "certificate: constant " << v.constant->str() << " in the Groebner basis\n";
    if (!v.reason.empty()) std::cout << "reason: " << v.reason << "\n";
  }
  switch (v.status) {
    case IsoVerdict::Status::isomorphic:
      return 0;
    case IsoVerdict::Status::not_isomorphic:
      return 1;
    case IsoVerdict::Status::unknown:
      break;
  }
  return 3;
}

int cmd_antipode(const StructureFile& f, const std::string& format) {
  if (f.kind != "bialgebra") throw InputError("antipode: expected a bialgebra");
  const BiHomBialgebra b = f.bialgebra();
  const AntipodeResult r = solve_antipode(b);
  json j = antipode_json(r);
  if (r.antipode) j["check"] = check_antipode(b, *r.antipode).holds;
  if (format == "structured") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << antipode_status_name(r.status) << "\n";
    if (r.antipode) {
      std::cout << "S = " << r.antipode->str() << "\n";
      std::cout << "solution_space_dim: " << r.solution_space_dim << "\n";
    }
    if (!r.reason.empty()) std::cout << "reason: " << r.reason << "\n";
  }
  switch (r.status) {
    case AntipodeResult::Status::found:
      return 0;
    case AntipodeResult::Status::none:
      return 1;
    case AntipodeResult::Status::not_applicable:
      break;
  }
  return 4;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

int cmd_enum(const StructureFile& f, const ComulSearchOptions& opt, const std::string& psi_name,
             const std::string& omega_name, const std::string& format) {
  const BiHomAlgebra& a = need_algebra(f, "enum-comul");
  const auto found = enumerate_comultiplications(a, twist_named(psi_name, a), twist_named(omega_name, a), opt);
  if (format == "structured") {
    json arr = json::array();
    for (const auto& b : found) arr.push_back(to_json(b.coa));
    std::cout << json{{"count", found.size()}, {"comultiplications", arr}}.dump(2) << "\n";
  } else {
    std::cout << found.size() << " comultiplications\n";
    for (std::size_t i = 0; i < found.size(); ++i) {
      std::cout << "#" << i + 1 << " comul " << to_json(found[i].coa)["comul"].dump();
      if (found[i].coa.counit) std::cout << " counit " << vec_str(*found[i].coa.counit);
      std::cout << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification and audit of BiHom-associative structures"};
  app.require_subcommand(1);

  std::string format = "human";
  std::size_t budget = GroebnerOptions{}.max_steps;
  std::vector<std::string> inputs;
  std::string catalog_id;
  std::string out;
  std::string scope = "all";
  std::string grid;
  std::size_t sparsity = static_cast<std::size_t>(-1);
  std::string psi = "id", omega = "id";
  bool counital = false;
  std::string system = "variety";
  std::string order = "degrevlex";

  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", format, "structured or human")->check(CLI::IsMember({"structured", "human"}));
  };
  auto add_input = [&](CLI::App* s, std::size_t max) {
    s->add_option("inputs", inputs, "structure files or catalog ids")->expected(0, static_cast<int>(max));
    s->add_option("--catalog", catalog_id, "catalog entry id");
  };

  auto* verify = app.add_subcommand("verify", "check every axiom of a structure");
  add_input(verify, 1);
  add_format(verify);
  auto* iso = app.add_subcommand("iso", "decide isomorphism of two algebras");
  add_input(iso, 2);
  add_format(iso);
  iso->add_option("--budget", budget, "Groebner reduction step budget");
  auto* anti = app.add_subcommand("antipode", "solve for an antipode");
  add_input(anti, 1);
  add_format(anti);
  auto* aud = app.add_subcommand("audit", "audit the embedded catalog");
  aud->add_option("--scope", scope, "all, an entry id, theorem:<name> or pairwise:<name>");
  aud->add_option("--out", out, "report path (default standard output)");
  aud->add_option("--budget", budget, "Groebner reduction step budget");
  aud->add_option("--grid", grid, "coefficient grid of the remark searches (default -1,0,1)");
  add_format(aud);
  auto* en = app.add_subcommand("enum-comul", "enumerate compatible comultiplications over a grid");
  add_input(en, 1);
  add_format(en);
  en->add_option("--grid", grid, "comma-separated rational coefficients (default -2,-1,0,1,2)");
  en->add_option("--sparsity", sparsity, "maximum nonzero coefficients per Delta(e_i)");
  en->add_option("--psi", psi, "id, alpha or beta");
  en->add_option("--omega", omega, "id, alpha or beta");
  en->add_flag("--counital", counital, "require a counit");
  auto* gb = app.add_subcommand("groebner", "dump the reduced Groebner basis of a generated system");
  add_input(gb, 2);
  gb->add_option("--system", system, "variety, iso or stabilizer")
      ->check(CLI::IsMember({"variety", "iso", "stabilizer"}));
  gb->add_option("--order", order, "degrevlex or lex")->check(CLI::IsMember({"degrevlex", "lex"}));
  gb->add_option("--budget", budget, "Groebner reduction step budget");
  add_format(gb);
  auto* fp = app.add_subcommand("fingerprint", "print isomorphism invariants");
  add_input(fp, 1);
  add_format(fp);
  auto* ex = app.add_subcommand("export-catalog", "write the catalog as structure files");
  ex->add_option("--out", out, "target directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto structures = [&](std::size_t want) {
    std::vector<StructureFile> fs;
    if (!catalog_id.empty()) fs.push_back(resolve(catalog_id, true));
    for (const auto& s : inputs) fs.push_back(resolve(s));
    if (fs.size() != want)
      throw InputError("expected " + std::to_string(want) + " input" + (want > 1 ? "s" : "") + ", got " +
                       std::to_string(fs.size()));
    return fs;
  };

  try {
    IsoOptions iso_opt;
    iso_opt.groebner.max_steps = budget;
    if (*verify) return cmd_verify(structures(1)[0], format);
    if (*iso) {
      auto fs = structures(2);
      return cmd_iso(fs[0], fs[1], iso_opt, format);
    }
    if (*anti) return cmd_antipode(structures(1)[0], format);
    if (*aud) {
      AuditOptions ao;
      ao.iso = iso_opt;
      if (!grid.empty()) ao.remark_grid = parse_grid(grid);
      const AuditReport r = audit(load_catalog(), scope, ao);
      write_out(out, emit_report(r, format == "structured" ? ReportFormat::structured : ReportFormat::human));
      return 0;
    }
    if (*en) {
      ComulSearchOptions opt;
      if (!grid.empty()) opt.grid = parse_grid(grid);
      opt.sparsity = sparsity;
      opt.counital = counital;
      return cmd_enum(structures(1)[0], opt, psi, omega, format);
    }
    if (*gb) {
      const auto fs = structures(system == "iso" ? 2 : 1);
      const BiHomAlgebra& a = need_algebra(fs[0], "groebner");
      Ideal ideal;
      if (system == "iso") {
        const BiHomAlgebra& b = need_algebra(fs[1], "groebner");
        if (a.dim != b.dim) throw InputError("dimension mismatch");
        ideal = gen_iso_system(a, b);
      } else if (system == "stabilizer") {
        ideal = gen_stabilizer_system(a);
      } else {
        ideal = gen_variety_system(a.dim, {true, false, false}, a, a.unit);
      }
      ideal.order = order == "lex" ? MonomialOrder::lex : MonomialOrder::degrevlex;
      GroebnerOptions go;
      go.max_steps = budget;
      const GroebnerResult res = buchberger(ideal, go);
      const std::string status = res.complete() ? "complete" : "budget_exceeded";
      if (format == "structured") {
        json j = basis_json(res.basis);
        j["status"] = status;
        j["steps"] = res.steps;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "variables: ";
        for (std::size_t i = 0; i < res.basis.variables.size(); ++i)
          std::cout << (i ? ", " : "") << res.basis.variables[i];
        std::cout << "\norder: " << order_name(res.basis.order) << "\nstatus: " << status
                  << "\nsteps: " << res.steps << "\n";
        for (const auto& p : res.basis.basis) std::cout << "  " << p.str() << "\n";
      }
      return res.complete() ? 0 : 3;
    }
    if (*fp) {
      emit(fingerprint_json(fingerprint(need_algebra(structures(1)[0], "fingerprint"))), format);
      return 0;
    }
    if (*ex) {
      export_catalog(load_catalog(), out);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const SearchRefused& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
  return 0;
}
