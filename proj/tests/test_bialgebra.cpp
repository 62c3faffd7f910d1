#include "bihom/bialgebra.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace bihom;
using fixture::vec;

TEST_CASE("base field is a bialgebra with antipode [1]") {
  const BiHomBialgebra k{fixture::base_field(), fixture::base_field_coalgebra()};
  CHECK(check_compatibility(k).passes());
  const AntipodeResult r = solve_antipode(k);
  REQUIRE(r.status == AntipodeResult::Status::found);
  CHECK(*r.antipode == Matrix{{1}});
  CHECK(r.solution_space_dim == 0);
  CHECK(check_antipode(k, Matrix{{1}}).holds);
  CHECK_FALSE(check_antipode(k, Matrix{{2}}).holds);
}

TEST_CASE("grouplike comultiplication over Hu2_4") {
  const BiHomBialgebra b{fixture::hu2_4(), fixture::grouplike2()};
  const CompatibilityReport rep = check_compatibility(b);
  CHECK(rep.passes());
  CHECK(rep.unit_counit == UnitStatus::pass);
  const AntipodeResult r = solve_antipode(b);
  CHECK(r.status == AntipodeResult::Status::none);
  CHECK(r.reason == "antipode system is inconsistent");
}

TEST_CASE("grouplike oracle: S(e2) e2 = e1 has no solution in Hu2_4") {
  // right multiplication by e2 in Hu2_4 has image span(e2)
  const BiHomAlgebra a = fixture::hu2_4();
  std::vector<Vec> image;
  for (std::size_t i = 0; i < 2; ++i) image.push_back(eval_mul(a, basis_vec(2, i), vec({0, 1})));
  CHECK_FALSE(in_span(image, vec({1, 0})));
  fixture::Gen gen(3001);
  const BiHomBialgebra b{a, fixture::grouplike2()};
  for (int trial = 0; trial < 200; ++trial) CHECK_FALSE(check_antipode(b, gen.matrix(2, -2, 2)).holds);
}

TEST_CASE("a non-grouplike Delta(e2) breaks the counit law") {
  BiHomCoalgebra c = fixture::grouplike2();
  c.comul(1, 1, 1) = 0;
  c.comul(1, 0, 1) = 1;
  const CompatibilityReport rep = check_compatibility({fixture::hu2_4(), c});
  CHECK_FALSE(rep.passes());
  CHECK(rep.comul_multiplicative.holds);
  CHECK(rep.coalgebra.coassociative.holds);
  CHECK(rep.counit.status == UnitStatus::fail);
  CHECK(rep.counit.law == "(id(x)eps)Delta=omega");
  CHECK(rep.counit.witness.at == std::vector<std::size_t>{1});
  CHECK(*rep.first_failure() == "counit: (id(x)eps)Delta=omega");
}

TEST_CASE("group algebra of C2 has the identity antipode") {
  const BiHomBialgebra b{fixture::group_algebra_c2(), fixture::grouplike2()};
  REQUIRE(check_compatibility(b).passes());
  const AntipodeResult r = solve_antipode(b);
  REQUIRE(r.status == AntipodeResult::Status::found);
  CHECK(*r.antipode == Matrix::identity(2));
  CHECK(r.solution_space_dim == 0);
  CHECK(check_antipode(b, Matrix::identity(2)).holds);
  const AntipodeCheck bad = check_antipode(b, Matrix{{1, 0}, {0, -1}});
  CHECK_FALSE(bad.holds);
  CHECK(bad.witness.at == std::vector<std::size_t>{1});
  CHECK(bad.witness.lhs == vec({-1, 0}));
  CHECK(bad.witness.rhs == vec({1, 0}));
}

TEST_CASE("solve_antipode refuses without unit, counit or compatibility") {
  BiHomBialgebra b{fixture::group_algebra_c2(), fixture::grouplike2()};
  b.coa.counit.reset();
  CHECK(solve_antipode(b).status == AntipodeResult::Status::not_applicable);
  CHECK(solve_antipode(b).reason == "unit and counit required");
  BiHomBialgebra bad{fixture::group_algebra_c2(), fixture::grouplike2()};
  bad.coa.comul(1, 1, 1) = 2;
  const AntipodeResult r = solve_antipode(bad);
  CHECK(r.status == AntipodeResult::Status::not_applicable);
  CHECK(r.reason.rfind("not a bialgebra: ", 0) == 0);
}

TEST_CASE("antipode system is linear: residual at S = 0 is the eps(h)u part") {
  const BiHomBialgebra b{fixture::group_algebra_c2(), fixture::grouplike2()};
  const AntipodeSystem sys = antipode_system(b);
  const std::size_t unknowns = sys.m.cols();
  CHECK(unknowns == 4);
  // rows for the two convolution identities come first: 2 identities x n basis elements x n coordinates
  Vec expected_rhs = zero_vec(sys.m.rows());
  for (std::size_t h = 0; h < 2; ++h) {
    expected_rhs[h * 2 + 0] = 1;      // eps(e_h) u = e1, first identity
    expected_rhs[4 + h * 2 + 0] = 1;  // second identity
  }
  CHECK(sys.rhs == expected_rhs);
  fixture::Gen gen(3002);
  for (int trial = 0; trial < 20; ++trial) {
    const Vec s = gen.vector(unknowns);
    const Vec ms = sys.m.apply(s);
    CHECK(sys.m.apply(scale(2, s)) == scale(2, ms));
  }
}

TEST_CASE("compatibility is invariant under simultaneous transport") {
  fixture::Gen gen(3003);
  const BiHomBialgebra b{fixture::group_algebra_c2(), fixture::grouplike2()};
  const BiHomBialgebra bad{fixture::hu2_4(), fixture::coalgebra({{{1, 0}, {0, 0}}, {{0, 1}, {0, 0}}}, fixture::id2,
                                                                   fixture::id2, vec({1, 1}))};
  for (int trial = 0; trial < 25; ++trial) {
    const Matrix phi = gen.invertible(2);
    for (const auto& x : {b, bad}) {
      const BiHomBialgebra s{transport(x.alg, phi), transport_coalgebra(x.coa, phi)};
      CHECK(check_compatibility(s).passes() == check_compatibility(x).passes());
    }
  }
}

TEST_CASE("found antipodes always satisfy check_antipode") {
  fixture::Gen gen(3004);
  // group algebra of C2 transported: still Hopf
  const BiHomBialgebra b{fixture::group_algebra_c2(), fixture::grouplike2()};
  for (int trial = 0; trial < 25; ++trial) {
    const Matrix phi = gen.invertible(2);
    const BiHomBialgebra t{transport(b.alg, phi), transport_coalgebra(b.coa, phi)};
    const AntipodeResult r = solve_antipode(t);
    REQUIRE(r.status == AntipodeResult::Status::found);
    CHECK(check_antipode(t, *r.antipode).holds);
  }
}
