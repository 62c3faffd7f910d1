#pragma once

#include "bihom/bialgebra.hpp"
#include "bihom/groebner.hpp"
#include "bihom/invariants.hpp"
#include "bihom/iso.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace bihom {

constexpr int kSchemaVersion = 1;

/// Malformed structure file; the message names the offending location.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parsed structure file. kind is "algebra", "coalgebra" or "bialgebra";
/// the matching members are set.
struct StructureFile {
  std::string kind;
  std::optional<BiHomAlgebra> algebra;
  std::optional<BiHomCoalgebra> coalgebra;

  BiHomBialgebra bialgebra() const;
};

StructureFile parse_structure(const std::string& text);
StructureFile read_structure_file(const std::string& path);

nlohmann::json to_json(const BiHomAlgebra& a);
nlohmann::json to_json(const BiHomCoalgebra& c);
nlohmann::json to_json(const BiHomBialgebra& b);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string write_structure(const nlohmann::json& j);

nlohmann::json vec_json(const Vec& v);
nlohmann::json matrix_json(const Matrix& m);
nlohmann::json poly_json(const MultiPoly& p);
nlohmann::json ideal_json(const Ideal& i);
nlohmann::json basis_json(const GroebnerBasis& g);
nlohmann::json identity_json(const IdentityCheck& c);
nlohmann::json axioms_json(const AxiomReport& r);
nlohmann::json coalgebra_json(const CoalgebraReport& r, const CounitReport& counit);
nlohmann::json compatibility_json(const CompatibilityReport& r);
nlohmann::json antipode_json(const AntipodeResult& r);
nlohmann::json fingerprint_json(const Fingerprint& f);
nlohmann::json iso_json(const IsoVerdict& v);

std::string unit_status_name(UnitStatus s);
std::string antipode_status_name(AntipodeResult::Status s);

}  // namespace bihom
