#include "bihom/catalog.hpp"
#include "bihom/structure_io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

using namespace bihom;
using nlohmann::json;
using fixture::vec;

namespace {

// Tables of the two-dimensional classification typed out densely:
// products e1e1, e1e2, e2e1, e2e2, then alpha(e1), alpha(e2), beta(e1), beta(e2).
struct DenseRow {
  const char* id;
  int v[8][2];
};

constexpr DenseRow kDense[] = {
    {"H2_1", {{0, 1}, {0, 1}, {-1, 0}, {0, 1}, {1, 0}, {0, 1}, {-1, 0}, {0, 1}}},
    {"H2_2", {{0, 1}, {1, 0}, {-1, 0}, {0, -1}, {-1, 0}, {0, 1}, {1, 0}, {0, 1}}},
    {"H2_3", {{1, 0}, {0, 1}, {0, 1}, {0, 1}, {1, 0}, {0, 1}, {1, 0}, {0, 1}}},
    {"H2_4", {{1, 0}, {0, 1}, {0, 1}, {1, 0}, {1, 0}, {0, 1}, {1, 0}, {0, 1}}},
    {"H2_5", {{1, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 0}, {0, 1}}},
    {"H2_6", {{1, 0}, {1, 0}, {1, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 0}, {0, 1}}},
    {"H2_7", {{0, 0}, {1, 0}, {-1, 0}, {0, -1}, {-1, 0}, {0, 1}, {1, 0}, {0, 1}}},
    {"H2_8", {{-1, 0}, {0, -1}, {0, 0}, {0, 1}, {1, 0}, {0, -1}, {1, 0}, {0, 1}}},
    {"H2_9", {{1, 0}, {0, -1}, {0, 1}, {0, 0}, {1, 0}, {0, 1}, {0, 1}, {0, -1}}},
    {"H2_10", {{0, 0}, {1, 0}, {1, 0}, {1, 1}, {1, 0}, {0, 1}, {1, 0}, {0, 1}}},
    {"H2_11", {{0, 1}, {1, 0}, {1, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 0}, {0, 1}}},
    {"H2_12", {{0, 0}, {1, 0}, {1, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}}},
    {"H2_13", {{0, 0}, {0, 0}, {0, 0}, {1, 0}, {1, 0}, {1, 1}, {1, 0}, {0, 1}}},
    {"Hu2_1", {{1, 0}, {0, 1}, {0, 1}, {1, 1}, {1, 0}, {0, 1}, {1, 0}, {0, 1}}},
    {"Hu2_2", {{1, 0}, {0, 1}, {0, 1}, {0, 0}, {1, 0}, {0, 1}, {1, 0}, {0, 1}}},
    {"Hu2_3", {{1, 0}, {0, -1}, {0, -1}, {1, 0}, {1, 0}, {0, -1}, {1, 0}, {0, -1}}},
    {"Hu2_4", {{1, 0}, {0, 1}, {0, 1}, {0, 1}, {1, 0}, {0, 1}, {1, 0}, {0, 1}}},
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string dense_text() {
  std::string s;
  for (const auto& r : kDense) {
    s += r.id;
    for (const auto& p : r.v) s += "|" + std::to_string(p[0]) + "," + std::to_string(p[1]);
    s += "\n";
  }
  return s;
}

BiHomAlgebra from_dense(const DenseRow& r) {
  std::vector<std::vector<std::vector<int>>> products(2, std::vector<std::vector<int>>(2));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) products[i][j] = {r.v[i * 2 + j][0], r.v[i * 2 + j][1]};
  const std::vector<std::vector<int>> alpha = {{r.v[4][0], r.v[4][1]}, {r.v[5][0], r.v[5][1]}};
  const std::vector<std::vector<int>> beta = {{r.v[6][0], r.v[6][1]}, {r.v[7][0], r.v[7][1]}};
  std::optional<Vec> unit;
  if (std::string(r.id).rfind("Hu", 0) == 0) unit = vec({1, 0});
  return fixture::algebra(products, alpha, beta, unit);
}

}  // namespace

TEST_CASE("catalog has the expected shape") {
  const Catalog& c = load_catalog();
  CHECK(c.size() == 105);
  std::map<std::string, int> per;
  for (const auto& e : c) ++per[e.theorem];
  CHECK(per["Table1"] == 13);
  CHECK(per["Table2"] == 4);
  CHECK(per["Dim3"] == 13);
  CHECK(per["Dim3Unital"] == 13);
  CHECK(per["Bialg2"] == 10);
  CHECK(per["Bialg2Unital"] == 10);
  CHECK(per["Bialg3"] == 9);
  CHECK(per["Bialg3Unital"] == 13);
  CHECK(per["Hopf2"] == 9);
  CHECK(per["Hopf3"] == 11);
  std::set<std::string> ids;
  for (const auto& e : c) CHECK(ids.insert(e.id).second);
  CHECK(theorem_names().size() == 10);
}

TEST_CASE("catalog entries resolve and carry consistent readings") {
  const Catalog& c = load_catalog();
  for (const auto& e : c) {
    if (e.kind == "algebra" || e.kind == "unital-algebra") {
      REQUIRE(e.algebra.has_value());
      CHECK(e.algebra->unit.has_value() == (e.kind == "unital-algebra"));
      CHECK(e.algebra->label == e.id);
    }
    if (e.kind == "comultiplication") CHECK(e.coalgebra.has_value());
    if (e.kind == "comultiplication" || e.kind == "hopf-pair") CHECK_FALSE(e.readings.empty());
    for (const auto& r : e.readings) {
      CHECK(lookup_entry(c, r.algebra) != nullptr);
      CHECK(lookup_entry(c, r.comultiplication) != nullptr);
    }
  }
  CHECK_THROWS_AS(find_entry(c, "H2_14"), CatalogError);
  CHECK(lookup_entry(c, "nope") == nullptr);
  CHECK(find_entry(c, "Hopf2_pair5").readings.size() == 2);
}

TEST_CASE("two-dimensional tables match an independent dense transcription") {
  // guards the dense copy itself against accidental edits
  CHECK(fnv1a(dense_text()) == 0xa80db339ff51b729ull);
  const Catalog& c = load_catalog();
  for (const auto& r : kDense) {
    CAPTURE(r.id);
    const BiHomAlgebra expected = from_dense(r);
    const BiHomAlgebra& got = *find_entry(c, r.id).algebra;
    CHECK(got.mul == expected.mul);
    CHECK(got.alpha == expected.alpha);
    CHECK(got.beta == expected.beta);
    CHECK(got.unit == expected.unit);
  }
}

TEST_CASE("compact notation") {
  const Notation n = parse_notation(2, "e1*e2=e1-e2; alpha(e2)=e1+e2; D(e1)=e1@e1; psi(e1)=e1; eps(e1)=1; unit=e1");
  CHECK(n.has_mul_part);
  CHECK(n.has_comul_part);
  CHECK(eval_mul(n.algebra, vec({1, 0}), vec({0, 1})) == vec({1, -1}));
  CHECK(n.algebra.alpha.apply(vec({0, 1})) == vec({1, 1}));
  CHECK(n.algebra.alpha.apply(vec({1, 0})) == vec({0, 0}));
  CHECK(n.coalgebra.comul(0, 0, 0) == 1);
  CHECK(*n.coalgebra.counit == vec({1, 0}));
  CHECK(*n.algebra.unit == vec({1, 0}));
  const Notation half = parse_notation(2, "e2*e2=-3/2e1");
  CHECK(half.algebra.mul(1, 1, 0) == Rational(-3, 2));
  CHECK_FALSE(half.has_comul_part);
  CHECK_THROWS_AS(parse_notation(2, "e3*e1=e1"), CatalogError);
  CHECK_THROWS_AS(parse_notation(2, "e1*e1"), CatalogError);
}

TEST_CASE("audit of a single entry reports the pinned H2_1 witness") {
  const AuditReport r = audit(load_catalog(), "H2_1");
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries[0]["verdict"] == "bihom_associative fails at (e1,e1,e1): lhs [0, 1], rhs [1, 0]");
  REQUIRE(r.discrepancies.size() == 1);
  CHECK(r.discrepancies[0].op == "check_axioms");
  const json j = report_json(r);
  for (const char* key : {"schema_version", "conventions", "scope", "budget", "entries", "pairwise", "remarks",
                          "discrepancies", "summary"})
    CHECK(j.contains(key));
  CHECK(j["summary"]["discrepancies"] == 1);
}

TEST_CASE("audit scopes") {
  const Catalog& c = load_catalog();
  const AuditReport empty = audit(c, "");
  CHECK(empty.entries.empty());
  CHECK(empty.pairwise.empty());
  CHECK(empty.discrepancies.empty());
  CHECK_THROWS_AS(audit(c, "pairwise:Nope"), CatalogError);
  CHECK_THROWS_AS(audit(c, "theorem:Nope"), CatalogError);
  CHECK_THROWS_AS(audit(c, "H9_9"), CatalogError);

  const AuditReport t2 = audit(c, "theorem:Table2");
  CHECK(t2.entries.size() == 4);
  CHECK(t2.discrepancies.empty());

  const AuditReport p1 = audit(c, "pairwise:Table1");
  REQUIRE(p1.pairwise.size() == 1);
  CHECK(p1.pairwise[0]["pairs"].size() == 78);
  bool swap_found = false;
  for (const auto& d : p1.discrepancies)
    if (d.inputs == json{{"a", "H2_3"}, {"b", "H2_6"}}) swap_found = d.computed.rfind("isomorphic", 0) == 0;
  CHECK(swap_found);
}

TEST_CASE("every discrepancy replays to the same computed value") {
  const Catalog& c = load_catalog();
  for (const std::string scope : {"theorem:Table1", "pairwise:Table1", "theorem:Dim3", "theorem:Bialg2Unital",
                                  "theorem:Hopf2", "theorem:Hopf3"}) {
    const AuditReport r = audit(c, scope);
    for (const auto& d : r.discrepancies) {
      CAPTURE(d.id);
      CHECK(replay(c, d.op, d.inputs) == d.computed);
    }
  }
  CHECK_THROWS_AS(replay(c, "frobnicate", json::object()), CatalogError);
}

TEST_CASE("audit output is deterministic") {
  const Catalog& c = load_catalog();
  const std::string a = emit_report(audit(c, "theorem:Table1"), ReportFormat::structured);
  const std::string b = emit_report(audit(c, "theorem:Table1"), ReportFormat::structured);
  CHECK(a == b);
  const std::string h = emit_report(audit(c, "H2_3"), ReportFormat::human);
  CHECK(h.find("audit scope: H2_3") == 0);
  CHECK(h.find("discrepancies: 0") != std::string::npos);
}

TEST_CASE("shipped catalog files match the embedded catalog") {
  const std::string dir = std::string(BIHOM_DATA_DIR) + "/catalog";
  const Catalog files = load_catalog_files(dir);
  const Catalog& c = load_catalog();
  REQUIRE(files.size() == c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    CAPTURE(c[i].id);
    CHECK(files[i] == c[i]);
  }
  std::ifstream in(dir + "/index.json");
  CHECK(json::parse(in) == catalog_index(c));
}

TEST_CASE("export and reload through a temporary directory") {
  const auto dir = std::filesystem::temp_directory_path() / "bihom_catalog_roundtrip";
  std::filesystem::remove_all(dir);
  export_catalog(load_catalog(), dir.string());
  CHECK(load_catalog_files(dir.string()) == load_catalog());
  {
    std::ofstream broken(dir / "H2_3.json");
    broken << "{";
  }
  try {
    load_catalog_files(dir.string());
    FAIL("expected a catalog error");
  } catch (const CatalogError& e) {
    CHECK(std::string(e.what()).find("catalog entry H2_3: ") == 0);
  }
  std::filesystem::remove_all(dir);
}
