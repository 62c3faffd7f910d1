#include "bihom/catalog.hpp"

#include <cctype>
#include <map>

namespace bihom {

namespace {

struct Raw {
  std::string id;
  std::string kind;
  std::string theorem;
  std::string source;
  std::size_t dim;
  std::string data;
  std::vector<std::string> flags;
  std::vector<Reading> readings;
};

const char* const kId2 = "alpha(e1)=e1; alpha(e2)=e2; beta(e1)=e1; beta(e2)=e2";
const char* const kId3 = "alpha(e1)=e1; alpha(e2)=e2; alpha(e3)=e3; beta(e1)=e1; beta(e2)=e2; beta(e3)=e3";
const char* const kTwistId2 = "psi(e1)=e1; psi(e2)=e2; omega(e1)=e1; omega(e2)=e2";
const char* const kTwistId3 = "psi(e1)=e1; psi(e2)=e2; psi(e3)=e3; omega(e1)=e1; omega(e2)=e2; omega(e3)=e3";

std::vector<Reading> all_of(const char* prefix, int count, const std::string& comul) {
  std::vector<Reading> r;
  for (int i = 1; i <= count; ++i) r.push_back({prefix + std::to_string(i), comul});
  return r;
}

std::vector<Raw> raw_entries() {
  static const std::string id2 = kId2, id3 = kId3, tw2 = kTwistId2, tw3 = kTwistId3;
  const std::string X2 = "e1@e1-e1@e2-e2@e1+e2@e2";
  const std::string Y2 = "e1@e1+e1@e2+e2@e1+e2@e2";
  const char* unit_e1 = "unit is e1";
  const char* dim3_unit = "unit taken to be e1 (the table does not name it)";

  std::vector<Raw> r;
  // two-dimensional algebras
  r.push_back({"H2_1", "algebra", "Table1", "Table 1, H^2_1", 2,
               "e1*e1=e2; e1*e2=e2; e2*e1=-e1; e2*e2=e2; alpha(e1)=e1; alpha(e2)=e2; beta(e1)=-e1; beta(e2)=e2", {}, {}});
  r.push_back({"H2_2", "algebra", "Table1", "Table 1, H^2_2", 2,
               "e1*e1=e2; e1*e2=e1; e2*e1=-e1; e2*e2=-e2; alpha(e1)=-e1; alpha(e2)=e2; beta(e1)=e1; beta(e2)=e2", {}, {}});
  r.push_back({"H2_3", "algebra", "Table1", "Table 1, H^2_3", 2, "e1*e1=e1; e1*e2=e2; e2*e1=e2; e2*e2=e2; " + id2, {}, {}});
  r.push_back({"H2_4", "algebra", "Table1", "Table 1, H^2_4", 2, "e1*e1=e1; e1*e2=e2; e2*e1=e2; e2*e2=e1; " + id2, {}, {}});
  r.push_back({"H2_5", "algebra", "Table1", "Table 1, H^2_5", 2, "e1*e1=e1; e1*e2=e2; e2*e1=e1; e2*e2=e2; " + id2, {}, {}});
  r.push_back({"H2_6", "algebra", "Table1", "Table 1, H^2_6", 2, "e1*e1=e1; e1*e2=e1; e2*e1=e1; e2*e2=e2; " + id2, {}, {}});
  r.push_back({"H2_7", "algebra", "Table1", "Table 1, H^2_7", 2,
               "e1*e2=e1; e2*e1=-e1; e2*e2=-e2; alpha(e1)=-e1; alpha(e2)=e2; beta(e1)=e1; beta(e2)=e2", {}, {}});
  r.push_back({"H2_8", "algebra", "Table1", "Table 1, H^2_8", 2,
               "e1*e1=-e1; e1*e2=-e2; e2*e2=e2; alpha(e1)=e1; alpha(e2)=-e2; beta(e1)=e1; beta(e2)=e2", {}, {}});
  r.push_back({"H2_9", "algebra", "Table1", "Table 1, H^2_9", 2,
               "e1*e1=e1; e1*e2=-e2; e2*e1=e2; alpha(e1)=e1; alpha(e2)=e2; beta(e1)=e2; beta(e2)=-e2", {}, {}});
  r.push_back({"H2_10", "algebra", "Table1", "Table 1, H^2_10", 2, "e1*e2=e1; e2*e1=e1; e2*e2=e1+e2; " + id2, {}, {}});
  r.push_back({"H2_11", "algebra", "Table1", "Table 1, H^2_11", 2, "e1*e1=e2; e1*e2=e1; e2*e1=e1; e2*e2=e2; " + id2, {}, {}});
  r.push_back({"H2_12", "algebra", "Table1", "Table 1, H^2_12", 2, "e1*e2=e1; e2*e1=e1; e2*e2=e1; beta(e2)=e1",
               {"alpha and beta(e1) unlisted, taken as zero"}, {}});
  r.push_back({"H2_13", "algebra", "Table1", "Table 1, H^2_13", 2,
               "e2*e2=e1; alpha(e1)=e1; alpha(e2)=e1+e2; beta(e1)=e1; beta(e2)=e2", {}, {}});

  // two-dimensional unital algebras
  r.push_back({"Hu2_1", "unital-algebra", "Table2", "Table 2, Hu^2_1", 2,
               "e1*e1=e1; e1*e2=e2; e2*e1=e2; e2*e2=e1+e2; unit=e1; " + id2, {unit_e1}, {}});
  r.push_back({"Hu2_2", "unital-algebra", "Table2", "Table 2, Hu^2_2", 2, "e1*e1=e1; e1*e2=e2; e2*e1=e2; unit=e1; " + id2,
               {unit_e1}, {}});
  r.push_back({"Hu2_3", "unital-algebra", "Table2", "Table 2, Hu^2_3", 2,
               "e1*e1=e1; e1*e2=-e2; e2*e1=-e2; e2*e2=e1; alpha(e1)=e1; beta(e1)=e1; alpha(e2)=-e2; beta(e2)=-e2; unit=e1",
               {unit_e1}, {}});
  r.push_back({"Hu2_4", "unital-algebra", "Table2", "Table 2, Hu^2_4", 2,
               "e1*e1=e1; e1*e2=e2; e2*e1=e2; e2*e2=e2; unit=e1; " + id2, {unit_e1}, {}});

  // three-dimensional algebras
  r.push_back({"H3_1", "algebra", "Dim3", "three-dimensional table, H^3_1", 3,
               "e1*e1=e1; e1*e2=e1; e2*e1=e2; e2*e2=e2; e3*e2=e3; e3*e3=e3; alpha(e1)=e1; alpha(e2)=e2; beta(e1)=e1; "
               "beta(e2)=e1-e2",
               {}, {}});
  r.push_back({"H3_2", "algebra", "Dim3", "three-dimensional table, H^3_2", 3,
               "e1*e1=e1; e1*e2=e1; e1*e3=e3; e2*e1=e2; e2*e2=e2; e2*e3=e3; e3*e1=e3; e3*e2=e3; alpha(e1)=e1; "
               "alpha(e2)=e2; alpha(e3)=e3; beta(e1)=e1; beta(e2)=e1",
               {}, {}});
  r.push_back({"H3_3", "algebra", "Dim3", "three-dimensional table, H^3_3", 3,
               "e1*e1=e1; e1*e2=e1; e2*e2=e2; e1*e3=-e3; e3*e2=e1-e2; alpha(e1)=e1; alpha(e2)=e2; alpha(e3)=-e3; "
               "beta(e1)=e1; beta(e2)=e1",
               {}, {}});
  r.push_back({"H3_4", "algebra", "Dim3", "three-dimensional table, H^3_4", 3,
               "e1*e1=e1; e1*e2=e1-e2; e2*e1=e2; e2*e2=-e1; alpha(e1)=e1; alpha(e2)=e2; beta(e1)=e1", {}, {}});
  r.push_back({"H3_5", "algebra", "Dim3", "three-dimensional table, H^3_5", 3,
               "e1*e1=e1; e1*e2=e1; e2*e1=e2; e2*e2=e2; e3*e1=e3; e3*e2=e3; e3*e3=e1-e3; alpha(e1)=e1; alpha(e2)=e2; "
               "alpha(e3)=e3; beta(e1)=e1; beta(e2)=e1",
               {}, {}});
  r.push_back({"H3_6", "algebra", "Dim3", "three-dimensional table, H^3_6", 3,
               "e1*e1=e1; e1*e2=e1; e1*e3=e3; e2*e1=e2; e2*e2=e2; e2*e3=e3; e3*e1=e3; e3*e2=e3; alpha(e1)=e1; "
               "alpha(e2)=e2; alpha(e3)=e3; beta(e1)=e1; beta(e2)=e1",
               {}, {}});
  r.push_back({"H3_7", "algebra", "Dim3", "three-dimensional table, H^3_7", 3,
               "e1*e1=e1; e1*e2=e2; e3*e2=e3; e3*e3=e3; alpha(e1)=e1; alpha(e2)=e2; beta(e1)=e1", {}, {}});
  r.push_back({"H3_8", "algebra", "Dim3", "three-dimensional table, H^3_8", 3,
               "e1*e3=e1-e2; e2*e3=e1-e2; e3*e3=e1-e2; alpha(e1)=e1; alpha(e2)=e1-e2; alpha(e3)=e2-e3; beta(e1)=e1; "
               "beta(e2)=e1-e2; beta(e3)=e2-e3",
               {}, {}});
  r.push_back({"H3_9", "algebra", "Dim3", "three-dimensional table, H^3_9", 3,
               "e2*e3=-e1; e3*e2=e1; e3*e3=e1; alpha(e1)=e1; alpha(e2)=e1+e2; alpha(e3)=e2+e3; beta(e1)=e1; "
               "beta(e2)=e1+e2; beta(e3)=e2+e3",
               {}, {}});
  r.push_back({"H3_10", "algebra", "Dim3", "three-dimensional table, H^3_10", 3,
               "e1*e3=e1+e2; e2*e3=e1+e2; e3*e1=e1-e2; e3*e2=e1-e2; e3*e3=e1-e2; alpha(e1)=e1; alpha(e2)=e1-e2; "
               "alpha(e3)=e2-e3; beta(e1)=e1; beta(e2)=e1-e2; beta(e3)=e2-e3",
               {}, {}});
  r.push_back({"H3_11", "algebra", "Dim3", "three-dimensional table, H^3_11", 3,
               "e2*e3=-e1; e3*e2=e1; e3*e3=e1; alpha(e1)=e1; alpha(e2)=e1+e2; alpha(e3)=e1+e2+e3; beta(e1)=e1; "
               "beta(e2)=e1+e2; beta(e3)=e1+e2+e3",
               {}, {}});
  r.push_back({"H3_12", "algebra", "Dim3", "three-dimensional table, H^3_12", 3,
               "e1*e3=e1-e2; e2*e3=e1-e2; e3*e3=e1-e2; alpha(e1)=e1; alpha(e2)=e1; alpha(e3)=e2; beta(e1)=e1; "
               "beta(e2)=e1; beta(e3)=e2",
               {}, {}});
  r.push_back({"H3_13", "algebra", "Dim3", "three-dimensional table, H^3_13", 3,
               "e1*e3=e1-e2; e2*e3=e1-e2; e3*e1=e1-e2; e3*e2=e1-e2; e3*e3=e1-e2; alpha(e1)=e1; alpha(e2)=e1; "
               "alpha(e3)=e2; beta(e1)=e1; beta(e2)=e1; beta(e3)=e2",
               {}, {}});

  // three-dimensional unital algebras
  r.push_back({"Hu3_1", "unital-algebra", "Dim3Unital", "three-dimensional unital table, Hu^3_1", 3,
               "e1*e1=e1; e1*e2=e1-e2; e2*e1=e2; e2*e2=-e1; e3*e3=-e3; alpha(e1)=e1; alpha(e2)=e2; beta(e1)=e1; "
               "beta(e2)=e1-e2; unit=e1",
               {dim3_unit}, {}});
  r.push_back({"Hu3_2", "unital-algebra", "Dim3Unital", "three-dimensional unital table, Hu^3_2", 3,
               "e1*e1=e1; e1*e2=e1; e2*e1=e2; e2*e2=e2; e2*e3=e1-e2; e3*e1=e3; e3*e2=e3; e3*e3=e1-e2; alpha(e1)=e1; "
               "alpha(e2)=e2; alpha(e3)=e3; beta(e1)=e1; beta(e2)=e1; unit=e1",
               {dim3_unit}, {}});
  r.push_back({"Hu3_3", "unital-algebra", "Dim3Unital", "three-dimensional unital table, Hu^3_3", 3,
               "e1*e1=e1; e1*e2=e1; e2*e1=e2; e2*e2=e2; e3*e1=e3; e3*e2=e3; alpha(e1)=e1; alpha(e2)=e2; alpha(e3)=e3; "
               "beta(e1)=e1; beta(e2)=e1; unit=e1",
               {dim3_unit}, {}});
  r.push_back({"Hu3_4", "unital-algebra", "Dim3Unital", "three-dimensional unital table, Hu^3_4", 3,
               "e1*e1=e1; e1*e2=e1; e2*e1=e2; e2*e2=e2; e3*e3=e3; alpha(e1)=e1; alpha(e2)=e2; beta(e1)=e1; "
               "beta(e2)=e1; unit=e1",
               {dim3_unit}, {}});
  r.push_back({"Hu3_5", "unital-algebra", "Dim3Unital", "three-dimensional unital table, Hu^3_5", 3,
               "e1*e1=e1; e1*e2=e1-e2; e2*e1=e2; e3*e1=e3; alpha(e1)=e1; alpha(e2)=e2; alpha(e3)=e3; beta(e1)=e1; "
               "beta(e2)=e1-e2; unit=e1",
               {dim3_unit}, {}});
  r.push_back({"Hu3_6", "unital-algebra", "Dim3Unital", "three-dimensional unital table, Hu^3_6", 3,
               "e1*e1=e1; e1*e2=e1; e2*e1=e2; e2*e2=e2; e2*e3=e1-e2; e3*e1=e3; e3*e2=e3; alpha(e1)=e1; alpha(e2)=e2; "
               "alpha(e3)=e3; beta(e1)=e1; beta(e2)=e1; unit=e1",
               {dim3_unit}, {}});
  r.push_back({"Hu3_7", "unital-algebra", "Dim3Unital", "three-dimensional unital table, Hu^3_7", 3,
               "e1*e1=e1; e1*e2=e1; e2*e1=e2; e2*e2=e2+e3; e3*e1=e3; e3*e2=e3; alpha(e1)=e1; alpha(e2)=e2; "
               "alpha(e3)=e3; beta(e1)=e1; beta(e2)=e1; unit=e1",
               {dim3_unit}, {}});
  r.push_back({"Hu3_8", "unital-algebra", "Dim3Unital", "three-dimensional unital table, Hu^3_8", 3,
               "e1*e1=e1; e1*e2=e1-e2; e2*e1=e2; e3*e1=e3; e3*e2=e3; alpha(e1)=e1; alpha(e2)=e2; alpha(e3)=e3; "
               "beta(e1)=e1; beta(e2)=e1-e2; unit=e1",
               {dim3_unit}, {}});
  r.push_back({"Hu3_9", "unital-algebra", "Dim3Unital", "three-dimensional unital table, ninth item", 3,
               "e1*e1=e1; e1*e2=e1; e2*e1=e2; e2*e2=e2; e3*e1=e3; e3*e2=e3; alpha(e1)=e1; alpha(e2)=e2; alpha(e3)=e3; "
               "beta(e1)=e1; beta(e2)=e1; unit=e1",
               {dim3_unit, "printed with the label H^3_9 instead of Hu^3_9"}, {}});
  r.push_back({"Hu3_10", "unital-algebra", "Dim3Unital", "three-dimensional unital table, Hu^3_10", 3,
               "e1*e1=e1; e1*e2=e1; e1*e3=e3; e2*e1=e2; e2*e2=e2; e2*e3=e3; alpha(e1)=e1; alpha(e2)=e2; beta(e1)=e1; "
               "beta(e2)=e1; beta(e3)=e3; unit=e1",
               {dim3_unit}, {}});
  r.push_back({"Hu3_11", "unital-algebra", "Dim3Unital", "three-dimensional unital table, Hu^3_11", 3,
               "e1*e1=e1; e1*e3=e3; e2*e2=e2; e3*e2=e2; alpha(e1)=e1; beta(e1)=e1; beta(e3)=e3; unit=e1", {dim3_unit},
               {}});
  r.push_back({"Hu3_12", "unital-algebra", "Dim3Unital", "three-dimensional unital table, Hu^3_12", 3,
               "e1*e1=e1; e1*e2=e2; e2*e3=e3; e3*e3=e3; alpha(e1)=e1; beta(e1)=e1; beta(e2)=e2; unit=e1", {dim3_unit},
               {}});
  r.push_back({"Hu3_13", "unital-algebra", "Dim3Unital", "three-dimensional unital table, Hu^3_13", 3,
               "e1*e1=e1; e2*e2=e2; e2*e3=e2; e3*e1=e3; alpha(e1)=e1; alpha(e3)=e3; beta(e1)=e1; unit=e1", {dim3_unit},
               {}});

  // two-dimensional comultiplications
  const auto t1 = all_of("H2_", 13, "");
  auto bialg2 = [&](int item, std::string data, std::vector<std::string> flags) {
    const std::string id = "Bialg2_item" + std::to_string(item);
    auto rd = t1;
    for (auto& x : rd) x.comultiplication = id;
    r.push_back({id, "comultiplication", "Bialg2", std::string("two-dimensional comultiplication list, item " + std::to_string(item)),
                 2, std::move(data), std::move(flags), rd});
  };
  const char* any2 = "underlying algebra not named; audited against every Table 1 algebra";
  bialg2(1, "D(e1)=e1@e2+e2@e2; D(e2)=e1@e1-e2@e2; psi(e1)=-e1; psi(e2)=e2; omega(e1)=-e1; omega(e2)=e2", {any2});
  bialg2(2, "D(e1)=e1@e1; D(e2)=" + Y2 + "; psi(e1)=e1; omega(e1)=e1; omega(e2)=e2", {any2, "psi(e2) unlisted, taken as zero"});
  bialg2(3, "D(e1)=" + X2 + "; D(e2)=" + X2 + "; psi(e1)=e1; psi(e2)=e2; omega(e1)=e1-e2; omega(e2)=e1-e2", {any2});
  bialg2(4, "D(e1)=" + X2 + "; D(e2)=" + X2 + "; psi(e1)=e1-e2; psi(e2)=e1-e2; omega(e1)=e1; omega(e2)=e2", {any2});
  bialg2(5, "D(e1)=" + X2 + "; D(e2)=" + X2 + "; psi(e1)=e1-e2; psi(e2)=e1-e2; omega(e1)=e1-e2; omega(e2)=e1-e2", {any2});
  bialg2(6, "D(e1)=" + X2 + "; D(e2)=" + X2 + "; psi(e1)=-e1+e2; psi(e2)=-e1+e2; omega(e1)=e1; omega(e2)=e2", {any2});
  bialg2(7, "D(e1)=" + X2 + "; D(e2)=" + X2 + "; psi(e1)=e1; psi(e2)=e2", {any2, "omega unlisted, taken as zero"});
  bialg2(8, "D(e1)=" + Y2 + "; D(e2)=" + Y2 + "; psi(e1)=e1-e2; psi(e2)=-e1+e2", {any2, "omega unlisted, taken as zero"});
  bialg2(9, "D(e1)=" + Y2 + "; D(e2)=" + Y2 + "; psi(e1)=e1-e2; psi(e2)=-e1+e2; omega(e1)=e1-e2; omega(e2)=-e1+e2", {any2});
  bialg2(10, "D(e1)=" + Y2 + "; D(e2)=" + Y2 + "; omega(e1)=e1+e2; omega(e2)=e1+e2", {any2, "psi unlisted, taken as zero"});

  // two-dimensional unital comultiplications
  auto unital2 = [&](const std::string& id, int item, std::string data, std::vector<std::string> flags,
                     std::vector<std::string> algebras) {
    std::vector<Reading> rd;
    for (auto& a : algebras) rd.push_back({a, id});
    r.push_back({id, "comultiplication", "Bialg2Unital",
                 std::string("two-dimensional unital comultiplication list, item " + std::to_string(item)), 2, std::move(data),
                 std::move(flags), rd});
  };
  const std::string D11 = "D(e1)=e1@e1; D(e2)=-e1@e1+e1@e2+e2@e1+e2@e2";
  const std::string D13 = "D(e1)=e1@e1; D(e2)=e1@e1+e1@e2+e2@e1-e2@e2";
  unital2("Delta2_1_1", 1, D11 + "; " + tw2 + "; eps(e1)=1; eps(e2)=2", {}, {"Hu2_1"});
  unital2("Delta2_1_2", 2, D11 + "; psi(e1)=e1; psi(e2)=e1; omega(e1)=e1; omega(e2)=e1; eps(e1)=1; eps(e2)=2", {}, {"Hu2_1"});
  unital2("Delta2_1_3", 3, D13 + "; psi(e1)=e1; psi(e2)=e1; omega(e1)=e1; omega(e2)=e1; eps(e1)=1; eps(e2)=-1", {}, {"Hu2_1"});
  unital2("Delta2_1_4", 4, D13 + "; psi(e1)=e1; psi(e2)=-e1; omega(e1)=e1; omega(e2)=-e1; eps(e1)=1; eps(e2)=-1", {},
          {"Hu2_1"});
  unital2("Delta2_2_1", 5, D11 + "; psi(e1)=e1; psi(e2)=e1; omega(e1)=e1; omega(e2)=e1; eps(e1)=1; eps(e2)=1",
          {"Delta(e2) is labelled Delta^2_{2,2} while Delta(e1) is labelled Delta^2_{2,1}"}, {"Hu2_2"});
  unital2("Delta2_2_2", 6, D13 + "; " + tw2 + "; eps(e1)=1; eps(e2)=1",
          {"Delta(e2) is labelled Delta^2_{2,3} while Delta(e1) is labelled Delta^2_{2,2}"}, {"Hu2_2"});
  unital2("Delta2_4_1", 7, "D(e1)=e1@e1; D(e2)=e2@e2; " + tw2 + "; eps(e1)=1; eps(e2)=1",
          {"Delta(e1) is labelled Delta^2_{4,1} while Delta(e2) is labelled Delta^2_{3,1}; audited over Hu2_4 and Hu2_3"},
          {"Hu2_4", "Hu2_3"});
  unital2("Delta2_4_2", 8, "D(e1)=e1@e1; D(e2)=e2@e2; psi(e1)=e1; psi(e2)=e1; omega(e1)=e1; omega(e2)=e1; eps(e1)=1; eps(e2)=1",
          {}, {"Hu2_4"});
  unital2("Delta2_4_3", 9, "D(e1)=e1@e1; D(e2)=e1@e2+e2@e1-2e2@e2; " + tw2 + "; eps(e1)=1; eps(e2)=1", {}, {"Hu2_4"});
  unital2("Delta2_4_4", 10,
          "D(e1)=e1@e1; D(e2)=e1@e2+e2@e1-e2@e2; psi(e1)=e1; psi(e2)=e1; omega(e1)=e1; omega(e2)=e1; eps(e1)=1",
          {"eps(e2) unlisted, taken as zero"}, {"Hu2_4"});

  // three-dimensional comultiplications
  const auto t3 = all_of("H3_", 13, "");
  auto bialg3 = [&](int item, std::string data, std::vector<std::string> flags) {
    const std::string id = "Bialg3_item" + std::to_string(item);
    auto rd = t3;
    for (auto& x : rd) x.comultiplication = id;
    flags.insert(flags.begin(), std::string("underlying algebra not named; audited against every three-dimensional table algebra"));
    r.push_back({id, "comultiplication", "Bialg3",
                 std::string("three-dimensional comultiplication list, item " + std::to_string(item)), 3, std::move(data),
                 std::move(flags), rd});
  };
  bialg3(1,
         "D(e1)=e1@e1; D(e2)=e1@e1+e1@e2-e1@e3+e2@e1+e2@e3-e3@e1-e3@e3; D(e3)=e3@e3; psi(e1)=e1; psi(e2)=e1+e2; "
         "psi(e3)=e3; omega(e1)=e1; omega(e2)=e1+e2; omega(e3)=e3",
         {});
  bialg3(2,
         "D(e1)=e1@e1; D(e2)=e1@e1+e1@e2+e1@e3+e2@e1-e2@e2+e2@e3-e3@e1+e3@e2; D(e3)=e3@e3; psi(e1)=e1; psi(e2)=e1; "
         "psi(e3)=e3; omega(e1)=e1; omega(e2)=e1; omega(e3)=e3",
         {});
  bialg3(3, "D(e1)=e1@e1+e3@e3; D(e2)=e1@e2+e2@e1; D(e3)=e1@e3+e3@e1; psi(e1)=e1; psi(e3)=e3; omega(e1)=e1; omega(e3)=e3",
         {"psi(e2) and omega(e2) unlisted, taken as zero"});
  bialg3(4, "D(e1)=e1@e1+e3@e3; D(e2)=e1@e2+e2@e1; D(e3)=-e1@e3-e3@e1; psi(e1)=e1; psi(e3)=e3; omega(e1)=e1; omega(e3)=e3",
         {"psi(e2) and omega(e2) unlisted, taken as zero"});
  bialg3(5, "D(e1)=e1@e1; D(e2)=e1@e2+e2@e1+e2@e2; D(e3)=e1@e3+e2@e3+e3@e1+e3@e2-e3@e3; psi(e1)=e1; omega(e1)=e1",
         {"psi and omega on e2, e3 unlisted, taken as zero"});
  bialg3(6,
         "D(e1)=e1@e1; D(e2)=e1@e2+e2@e1+e2@e2; D(e3)=e1@e3+e2@e3+e3@e1+e3@e2-e3@e3; psi(e1)=e1; psi(e2)=e2; "
         "omega(e1)=e1; omega(e2)=e2",
         {"psi(e3) and omega(e3) unlisted, taken as zero"});
  const std::string D7 = "D(e2)=-e1@e1+e1@e2+e2@e1; D(e3)=e1@e3+e3@e1";
  bialg3(7, D7 + "; psi(e1)=e1; psi(e2)=e1-e2; psi(e3)=-e3; omega(e1)=e1; omega(e2)=e1-e2; omega(e3)=-e3", {});
  bialg3(8, D7 + "; psi(e1)=e1; psi(e2)=e2; psi(e3)=e3; omega(e1)=e1; omega(e2)=e1-e2; omega(e3)=-e3", {});
  bialg3(9, D7 + "; psi(e1)=e1; psi(e2)=e1-e2; psi(e3)=-e3; omega(e1)=e1; omega(e2)=e2; omega(e3)=e3", {});

  // three-dimensional unital comultiplications
  std::vector<std::string> every_hu3;
  for (int i = 1; i <= 13; ++i) every_hu3.push_back("Hu3_" + std::to_string(i));
  const char* unknown_ref = "unknown-reference: the multiplication index exceeds the 13-entry unital table; audited "
                            "against every three-dimensional unital algebra";
  const char* plus_typo = "\"e_1+\\otimes e_3\" read as e1@e3";
  const char* params = "parameters a, b, c, d instantiated at 1";
  auto unital3 = [&](const std::string& id, int item, std::string data, std::vector<std::string> flags,
                     std::vector<std::string> algebras) {
    std::vector<Reading> rd;
    for (auto& a : algebras) rd.push_back({a, id});
    r.push_back({id, "comultiplication", "Bialg3Unital",
                 std::string("three-dimensional unital comultiplication list, item " + std::to_string(item)), 3, std::move(data),
                 std::move(flags), rd});
  };
  unital3("Delta3_2_1", 1,
          "D(e1)=e1@e1; D(e2)=-e1@e1+e1@e2+e2@e1; D(e3)=e1@e1-e1@e2+2e1@e3-e2@e1+e2@e2-e2@e2+2e3@e1-e3@e2+e3@e3; "
          "psi(e1)=e1; psi(e2)=e1; omega(e1)=e1; omega(e2)=e1; eps(e1)=1; eps(e2)=1",
          {"the terms +e2@e2 and -e2@e2 in Delta(e3) cancel"}, {"Hu3_2"});
  unital3("Delta3_3_1", 2,
          "D(e1)=e1@e1; D(e2)=e1@e1+e1@e2+e1@e3+e2@e1-e2@e2-e2@e3-e3@e1+e3@e2; D(e3)=-e3@e3; " + tw3 +
              "; eps(e1)=1; eps(e2)=1",
          {params}, {"Hu3_3"});
  unital3("Delta3_4_1", 3, "D(e1)=e1@e1; D(e2)=e2@e2; D(e3)=e1@e3+e3@e1+e3@e3; " + tw3 + "; eps(e1)=1; eps(e2)=1", {},
          {"Hu3_4"});
  unital3("Delta3_12_1", 4, "D(e1)=e1@e1; D(e2)=e1@e2+e2@e1; D(e3)=e1@e3+e3@e1; psi(e1)=e1; omega(e1)=e1; eps(e1)=1", {},
          {"Hu3_12"});
  unital3("Delta3_15_1", 5,
          "D(e1)=e1@e1; D(e2)=e1@e1+e1@e2-e1@e3+e2@e1-e2@e3-e3@e1-e3@e2+2e3@e3; D(e3)=-e2@e2+e2@e3+e3@e2; "
          "psi(e1)=e1; psi(e3)=e1; omega(e1)=e1; omega(e3)=e1; eps(e1)=1; eps(e3)=1",
          {unknown_ref}, every_hu3);
  unital3("Delta3_15_2", 6,
          "D(e1)=e1@e1; D(e2)=e1@e2+e2@e1-e2@e2-e2@e3-e3@e2; D(e3)=e1@e3+e2@e2-e3@e1-e3@e3; psi(e1)=e1; psi(e2)=e2; "
          "psi(e3)=e2+e3; omega(e1)=e1; omega(e2)=e2; omega(e3)=e2+e3; eps(e1)=1",
          {unknown_ref, params}, every_hu3);
  unital3("Delta3_20_1", 7, "D(e1)=e1@e1; D(e2)=e2@e2; D(e3)=e1@e3+e3@e1+e3@e3; " + tw3 + "; eps(e1)=1; eps(e2)=1",
          {unknown_ref}, every_hu3);
  unital3("Delta3_21_1", 8,
          "D(e1)=e1@e1; D(e2)=e1@e2+e2@e1+e2@e2; D(e3)=e3@e3; psi(e1)=e1; psi(e2)=e2; omega(e1)=e1; omega(e2)=e2; "
          "eps(e1)=1; eps(e2)=1",
          {unknown_ref}, every_hu3);
  unital3("Delta3_21_2", 9, "D(e1)=e1@e1; D(e2)=e1@e2+e2@e1; D(e3)=e1@e3+e3@e1; psi(e1)=e1; omega(e1)=e1; eps(e1)=1",
          {unknown_ref, plus_typo}, every_hu3);
  unital3("Delta3_22_1", 10,
          "D(e1)=e1@e1; D(e2)=e1@e2+e2@e1+e2@e2+e2@e3+e3@e2; D(e3)=e1@e3+e3@e1+e3@e3; psi(e1)=e1; psi(e3)=e3; "
          "omega(e1)=e1; omega(e3)=e3; eps(e1)=1",
          {unknown_ref, plus_typo}, every_hu3);
  unital3("Delta3_22_2", 11, "D(e1)=e1@e1; D(e2)=e2@e2; D(e3)=e1@e3+e3@e1+e3@e3; psi(e1)=e1; omega(e1)=e1; eps(e1)=1",
          {unknown_ref, plus_typo}, every_hu3);
  unital3("Delta3_22_3", 12,
          "D(e1)=e1@e1; D(e2)=e2@e2; D(e3)=e1@e3+e3@e1+e3@e3; psi(e1)=e1; psi(e3)=e3; omega(e1)=e1; omega(e3)=e3; "
          "eps(e1)=1",
          {unknown_ref, plus_typo}, every_hu3);
  unital3("Delta3_22_4", 13, "D(e1)=e1@e1; D(e2)=e2@e2; D(e3)=e1@e3+e3@e1+e3@e3; " + tw3 + "; eps(e1)=1; eps(e2)=1",
          {unknown_ref, plus_typo}, every_hu3);

  // Hopf pairs
  auto hopf = [&](const char* theorem, int dim, int k, const char* printed, std::vector<Reading> rd,
                  std::vector<std::string> flags) {
    const std::string id = std::string(dim == 2 ? "Hopf2_pair" : "Hopf3_pair") + std::to_string(k);
    r.push_back({id, "hopf-pair", theorem,
                 std::string(dim == 2 ? "two" : "three") + "-dimensional Hopf pair list, pair " + std::to_string(k) +
                   " " + printed,
                 static_cast<std::size_t>(dim), "", std::move(flags), std::move(rd)});
  };
  hopf("Hopf2", 2, 1, "(Hu^2_1, Delta^2_{1,1})", {{"Hu2_1", "Delta2_1_1"}}, {});
  hopf("Hopf2", 2, 2, "(Hu^2_1, Delta^2_{1,2})", {{"Hu2_1", "Delta2_1_2"}}, {});
  hopf("Hopf2", 2, 3, "(Hu^2_1, Delta^2_{1,4})", {{"Hu2_1", "Delta2_1_4"}}, {});
  hopf("Hopf2", 2, 4, "(Hu^2_2, Delta^2_{2,1})", {{"Hu2_2", "Delta2_2_1"}}, {});
  hopf("Hopf2", 2, 5, "(Hu^2_2, Delta^2_{2,2})", {{"Hu2_2", "Delta2_2_1"}, {"Hu2_2", "Delta2_2_2"}},
       {"Delta^2_{2,2} labels Delta(e2) of item 5 and Delta(e1) of item 6; both readings audited"});
  hopf("Hopf2", 2, 6, "(Hu^2_4, Delta^2_{4,1})", {{"Hu2_4", "Delta2_4_1"}}, {});
  hopf("Hopf2", 2, 7, "(Hu^2_4, Delta^2_{4,2})", {{"Hu2_4", "Delta2_4_2"}}, {});
  hopf("Hopf2", 2, 8, "(Hu^2_4, Delta^2_{4,3})", {{"Hu2_4", "Delta2_4_3"}}, {});
  hopf("Hopf2", 2, 9, "(Hu^2_4, Delta^2_{4,4})", {{"Hu2_4", "Delta2_4_4"}}, {});
  auto every = [&](const std::string& comul) {
    std::vector<Reading> rd;
    for (auto& a : every_hu3) rd.push_back({a, comul});
    return rd;
  };
  const char* hopf_unknown = "unknown-reference: Hu^3 index beyond the 13-entry table; audited against every "
                             "three-dimensional unital algebra";
  hopf("Hopf3", 3, 1, "(Hu^3_3, Delta^3_{3,1})", {{"Hu3_3", "Delta3_3_1"}}, {});
  hopf("Hopf3", 3, 2, "(Hu^3_4, Delta^3_{4,1})", {{"Hu3_4", "Delta3_4_1"}}, {});
  hopf("Hopf3", 3, 3, "(Hu^3_12, Delta^3_{12,1})", {{"Hu3_12", "Delta3_12_1"}}, {});
  hopf("Hopf3", 3, 4, "(Hu^3_15, Delta^3_{15,1})", every("Delta3_15_1"), {hopf_unknown});
  hopf("Hopf3", 3, 5, "(Hu^3_15, Delta^3_{15,2})", every("Delta3_15_2"), {hopf_unknown});
  hopf("Hopf3", 3, 6, "(Hu^3_21, Delta^3_{21,1})", every("Delta3_21_1"), {hopf_unknown});
  hopf("Hopf3", 3, 7, "(Hu^3_21, Delta^3_{21,2})", every("Delta3_21_2"), {hopf_unknown});
  hopf("Hopf3", 3, 8, "(Hu^3_22, Delta^3_{22,1})", every("Delta3_22_1"), {hopf_unknown});
  hopf("Hopf3", 3, 9, "(Hu^3_22, Delta^3_{22,2})", every("Delta3_22_2"), {hopf_unknown});
  hopf("Hopf3", 3, 10, "(Hu^3_22, Delta^3_{22,3})", every("Delta3_22_3"), {hopf_unknown});
  hopf("Hopf3", 3, 11, "(Hu^3_22, Delta^3_{22,4})", every("Delta3_22_4"), {hopf_unknown});
  return r;
}

// ---- notation parser ----

class NotationParser {
public:
  NotationParser(std::size_t n, const std::string& clause) : n_(n), s_(clause) {}

  std::string clause() const { return s_; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(const std::string& tok) {
    skip_ws();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(const std::string& tok) {
    if (!eat(tok)) fail("expected '" + tok + "'");
  }
  bool done() {
    skip_ws();
    return pos_ == s_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw CatalogError("notation clause '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
  }

  std::size_t basis_index() {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != 'e') fail("expected a basis vector");
    ++pos_;
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a basis index");
    const std::size_t i = std::stoul(s_.substr(start, pos_ - start));
    if (i < 1 || i > n_) fail("basis index out of range");
    return i - 1;
  }

  Rational coefficient() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
    if (start == pos_) return Rational(1);
    return Rational::parse(s_.substr(start, pos_ - start));
  }

  // sum of c e_j (order 1) or c e_j@e_k (order 2), flattened
  Vec combination(int order) {
    const std::size_t len = order == 1 ? n_ : n_ * n_;
    Vec v = zero_vec(len);
    skip_ws();
    if (eat("0")) return v;
    bool first = true;
    while (!done()) {
      Rational sign(1);
      if (eat("+")) {
      } else if (eat("-")) {
        sign = Rational(-1);
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      const Rational c = sign * coefficient();
      const std::size_t j = basis_index();
      std::size_t idx = j;
      if (order == 2) {
        expect("@");
        idx = j * n_ + basis_index();
      }
      v[idx] += c;
    }
    return v;
  }

  Rational scalar() {
    skip_ws();
    Rational sign(1);
    if (eat("-")) sign = Rational(-1);
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
    if (start == pos_) fail("expected a number");
    return sign * Rational::parse(s_.substr(start, pos_ - start));
  }

private:
  std::size_t n_;
  std::string s_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_clauses(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ';') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  std::vector<std::string> trimmed;
  for (auto& c : out) {
    auto b = c.find_first_not_of(" \t\n");
    if (b == std::string::npos) continue;
    auto e = c.find_last_not_of(" \t\n");
    trimmed.push_back(c.substr(b, e - b + 1));
  }
  return trimmed;
}

void count_check(const Catalog& c) {
  const std::map<std::string, std::size_t> expected = {
      {"Table1", 13}, {"Table2", 4},        {"Dim3", 13},  {"Dim3Unital", 13}, {"Bialg2", 10},
      {"Bialg2Unital", 10}, {"Bialg3", 9}, {"Bialg3Unital", 13}, {"Hopf2", 9},  {"Hopf3", 11}};
  std::map<std::string, std::size_t> got;
  for (const auto& e : c) ++got[e.theorem];
  for (const auto& [t, k] : expected)
    if (got[t] != k)
      throw CatalogError("catalog: theorem " + t + " has " + std::to_string(got[t]) + " entries, expected " +
                         std::to_string(k));
  if (got.size() != expected.size()) throw CatalogError("catalog: unexpected theorem name");
}

}  // namespace

Notation parse_notation(std::size_t n, const std::string& text) {
  Notation out;
  out.algebra = BiHomAlgebra::zero(n);
  out.algebra.alpha = Matrix(n, n);
  out.algebra.beta = Matrix(n, n);
  out.coalgebra = BiHomCoalgebra::zero(n);
  out.coalgebra.psi = Matrix(n, n);
  out.coalgebra.omega = Matrix(n, n);
  for (const auto& clause : split_clauses(text)) {
    NotationParser p(n, clause);
    auto set_column = [&](Matrix& m) {
      p.expect("(");
      const std::size_t i = p.basis_index();
      p.expect(")");
      p.expect("=");
      const Vec v = p.combination(1);
      for (std::size_t j = 0; j < n; ++j) m(j, i) = v[j];
    };
    if (p.eat("alpha")) {
      set_column(out.algebra.alpha);
      out.has_mul_part = true;
    } else if (p.eat("beta")) {
      set_column(out.algebra.beta);
      out.has_mul_part = true;
    } else if (p.eat("psi")) {
      set_column(out.coalgebra.psi);
      out.has_comul_part = true;
    } else if (p.eat("omega")) {
      set_column(out.coalgebra.omega);
      out.has_comul_part = true;
    } else if (p.eat("unit")) {
      p.expect("=");
      out.algebra.unit = p.combination(1);
      out.has_mul_part = true;
    } else if (p.eat("eps")) {
      p.expect("(");
      const std::size_t i = p.basis_index();
      p.expect(")");
      p.expect("=");
      if (!out.coalgebra.counit) out.coalgebra.counit = zero_vec(n);
      (*out.coalgebra.counit)[i] = p.scalar();
      out.has_comul_part = true;
    } else if (p.eat("D")) {
      p.expect("(");
      const std::size_t i = p.basis_index();
      p.expect(")");
      p.expect("=");
      const Vec v = p.combination(2);
      for (std::size_t jk = 0; jk < n * n; ++jk) out.coalgebra.comul(i, jk / n, jk % n) = v[jk];
      out.has_comul_part = true;
    } else {
      const std::size_t i = p.basis_index();
      p.expect("*");
      const std::size_t j = p.basis_index();
      p.expect("=");
      const Vec v = p.combination(1);
      for (std::size_t k = 0; k < n; ++k) out.algebra.mul(i, j, k) = v[k];
      out.has_mul_part = true;
    }
    if (!p.done()) p.fail("trailing text");
  }
  return out;
}

const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names = {"Table1", "Table2", "Dim3",  "Dim3Unital", "Bialg2",
                                                 "Bialg2Unital", "Bialg3", "Bialg3Unital", "Hopf2", "Hopf3"};
  return names;
}

const Catalog& load_catalog() {
  static const Catalog catalog = [] {
    Catalog c;
    for (const auto& raw : raw_entries()) {
      CatalogEntry e;
      e.id = raw.id;
      e.kind = raw.kind;
      e.theorem = raw.theorem;
      e.source = raw.source;
      e.flags = raw.flags;
      e.readings = raw.readings;
      try {
        if (e.kind != "hopf-pair") {
          Notation parsed = parse_notation(raw.dim, raw.data);
          if (e.kind == "comultiplication") {
            if (parsed.has_mul_part) throw CatalogError("algebra data in a comultiplication entry");
            parsed.coalgebra.label = e.id;
            e.coalgebra = std::move(parsed.coalgebra);
          } else {
            if (parsed.has_comul_part) throw CatalogError("coalgebra data in an algebra entry");
            if ((e.kind == "unital-algebra") != parsed.algebra.unit.has_value())
              throw CatalogError("unit presence does not match the entry kind");
            parsed.algebra.label = e.id;
            e.algebra = std::move(parsed.algebra);
          }
        }
      } catch (const std::exception& ex) {
        throw CatalogError("catalog entry " + e.id + ": " + ex.what());
      }
      c.push_back(std::move(e));
    }
    count_check(c);
    for (const auto& e : c)
      for (const auto& r : e.readings) {
        const CatalogEntry* a = lookup_entry(c, r.algebra);
        const CatalogEntry* d = lookup_entry(c, r.comultiplication);
        if (!a || !a->algebra || !d || !d->coalgebra || a->algebra->dim != d->coalgebra->dim)
          throw CatalogError("catalog entry " + e.id + ": unresolvable reading (" + r.algebra + ", " +
                             r.comultiplication + ")");
      }
    return c;
  }();
  return catalog;
}

const CatalogEntry* lookup_entry(const Catalog& c, const std::string& id) {
  for (const auto& e : c)
    if (e.id == id) return &e;
  return nullptr;
}

const CatalogEntry& find_entry(const Catalog& c, const std::string& id) {
  if (const CatalogEntry* e = lookup_entry(c, id)) return *e;
  throw CatalogError("no catalog entry '" + id + "'");
}

}  // namespace bihom
