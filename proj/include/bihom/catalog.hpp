#pragma once

#include "bihom/bialgebra.hpp"
#include "bihom/iso.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bihom {

class CatalogError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// One way of resolving which algebra and comultiplication an entry refers to.
struct Reading {
  std::string algebra;
  std::string comultiplication;
  friend bool operator==(const Reading&, const Reading&) = default;
};

struct CatalogEntry {
  std::string id;
  /// "algebra", "unital-algebra", "comultiplication" or "hopf-pair".
  std::string kind;
  /// Table1, Table2, Dim3, Dim3Unital, Bialg2, Bialg2Unital, Bialg3,
  /// Bialg3Unital, Hopf2 or Hopf3.
  std::string theorem;
  std::string source;
  std::vector<std::string> flags;
  std::optional<BiHomAlgebra> algebra;
  std::optional<BiHomCoalgebra> coalgebra;
  /// Candidate underlying algebras (comultiplications) or pairings (Hopf pairs).
  std::vector<Reading> readings;
  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

using Catalog = std::vector<CatalogEntry>;

/// The embedded classification data, in a fixed order. Counts per theorem
/// are checked on load.
const Catalog& load_catalog();

const CatalogEntry& find_entry(const Catalog& c, const std::string& id);
const CatalogEntry* lookup_entry(const Catalog& c, const std::string& id);

/// Theorem names in report order.
const std::vector<std::string>& theorem_names();

/// Parses the compact data notation, e.g.
/// "e1*e2=e1-e2; alpha(e2)=e1+e2; D(e1)=e1@e1; psi(e1)=e1; eps(e1)=1; unit=e1".
/// Anything not listed is zero. Throws CatalogError naming the clause.
struct Notation {
  BiHomAlgebra algebra;
  BiHomCoalgebra coalgebra;
  bool has_mul_part = false;
  bool has_comul_part = false;
};
Notation parse_notation(std::size_t n, const std::string& text);

/// Catalog entries as structure files plus index.json, in the layout written
/// by export_catalog. Throws CatalogError naming the offending entry.
Catalog load_catalog_files(const std::string& dir);
void export_catalog(const Catalog& c, const std::string& dir);
nlohmann::json catalog_index(const Catalog& c);

struct AuditOptions {
  IsoOptions iso;
  /// Coefficients tried by the bounded searches behind the "no bialgebra" remarks.
  std::vector<Rational> remark_grid = {-1, 0, 1};
};

struct Discrepancy {
  std::string id;
  std::string claim;
  std::string computed;
  /// Operation name and inputs that recompute `computed` (see replay).
  std::string op;
  nlohmann::json inputs;
};

struct AuditReport {
  std::string scope;
  std::size_t budget = 0;
  nlohmann::json entries = nlohmann::json::array();
  nlohmann::json pairwise = nlohmann::json::array();
  nlohmann::json remarks = nlohmann::json::array();
  std::vector<Discrepancy> discrepancies;
};

/// Scope: "all", "" (nothing), an entry id, "theorem:<name>" (entries of one
/// theorem) or "pairwise:<name>" (isomorphism matrix of one theorem).
/// Throws CatalogError on an unknown scope.
AuditReport audit(const Catalog& c, const std::string& scope, const AuditOptions& options = {});

enum class ReportFormat { structured, human };
std::string emit_report(const AuditReport& r, ReportFormat format);
nlohmann::json report_json(const AuditReport& r);

/// Recomputes the `computed` string of a discrepancy from its op and inputs.
std::string replay(const Catalog& c, const std::string& op, const nlohmann::json& inputs,
                   const AuditOptions& options = {});

}  // namespace bihom
