#include "bihom/algebra.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace bihom;
using fixture::vec;

TEST_CASE("eval_mul contracts bilinearly") {
  CHECK(eval_mul(fixture::h2_3(), vec({0, 1}), vec({0, 1})) == vec({0, 1}));
  CHECK(eval_mul(fixture::h2_13(), vec({0, 1}), vec({0, 1})) == vec({1, 0}));
  CHECK(eval_mul(fixture::h2_1(), vec({0, 0}), vec({3, -2})) == vec({0, 0}));
  // (e1 + 2 e2)(e2) in H2_3 = e2 + 2 e2
  CHECK(eval_mul(fixture::h2_3(), vec({1, 2}), vec({0, 1})) == vec({0, 3}));
  CHECK_THROWS_AS(eval_mul(fixture::h2_3(), vec({1}), vec({0, 1})), ShapeError);
}

TEST_CASE("check_axioms on hand-verified algebras") {
  CHECK(check_axioms(fixture::h2_3()).passes());
  CHECK(check_axioms(fixture::h2_13()).passes());
  const AxiomReport r = check_axioms(fixture::h2_1());
  CHECK_FALSE(r.bihom_associative.holds);
  CHECK(r.bihom_associative.at == std::vector<std::size_t>{0, 0, 0});
  CHECK(r.bihom_associative.lhs == vec({0, 1}));
  CHECK(r.bihom_associative.rhs == vec({1, 0}));
  CHECK(r.unit_laws == UnitStatus::not_applicable);
}

TEST_CASE("unit laws are checked when a unit is given") {
  BiHomAlgebra a = fixture::hu2_4();
  CHECK(check_axioms(a).unit_laws == UnitStatus::pass);
  a.unit = vec({0, 1});
  const AxiomReport r = check_axioms(a);
  CHECK(r.unit_laws == UnitStatus::fail);
  CHECK(r.unit_law == "x*u=alpha(x)");
  CHECK(r.unit_witness.at == std::vector<std::size_t>{0});
  CHECK(r.structure_passes());
  CHECK_FALSE(r.passes());
}

TEST_CASE("twists that do not commute are reported") {
  BiHomAlgebra a = BiHomAlgebra::zero(2);
  a.alpha = Matrix{{1, 1}, {0, 1}};
  a.beta = Matrix{{1, 0}, {1, 1}};
  const AxiomReport r = check_axioms(a);
  CHECK(r.bihom_associative.holds);
  CHECK_FALSE(r.twists_commute.holds);
}

TEST_CASE("transport") {
  const BiHomAlgebra h3 = fixture::h2_3();
  CHECK(transport(h3, Matrix::identity(2)) == h3);
  const Matrix swap{{0, 1}, {1, 0}};
  CHECK(transport(h3, swap).mul == fixture::h2_6().mul);
  const BiHomAlgebra t = transport(fixture::h2_13(), Matrix{{1, 0}, {0, 2}});
  CHECK(check_axioms(t).passes());
  CHECK_THROWS_AS(transport(h3, Matrix{{1, 1}, {1, 1}}), PreconditionError);
  const BiHomAlgebra u = transport(fixture::hu2_4(), swap);
  REQUIRE(u.unit.has_value());
  CHECK(*u.unit == vec({0, 1}));
  CHECK(check_axioms(u).passes());
}

TEST_CASE("yau twist") {
  const BiHomAlgebra h13 = fixture::h2_13();
  CHECK(yau_twist(h13, Matrix::identity(2)) == h13);
  const BiHomAlgebra t = yau_twist(h13, h13.alpha);
  CHECK(eval_mul(t, vec({0, 1}), vec({0, 1})) == vec({1, 0}));
  CHECK(t.alpha.apply(vec({0, 1})) == vec({2, 1}));
  CHECK(check_axioms(t).passes());
  // projection onto e2: gamma(e1 e2) = e2 but gamma(e1) gamma(e2) = 0
  CHECK_THROWS_AS(yau_twist(fixture::h2_3(), Matrix{{0, 0}, {0, 1}}), PreconditionError);
  // projection onto e1 is an endomorphism of H2_3 (e1 is the identity, e2 an idempotent mapped to 0)
  CHECK(check_axioms(yau_twist(fixture::h2_3(), Matrix{{1, 0}, {0, 0}})).passes());
}

TEST_CASE("yau twist names the violated identity") {
  try {
    yau_twist(fixture::h2_3(), Matrix{{0, 0}, {0, 1}});
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("phi(xy)=phi(x)phi(y) at (1,2)") != std::string::npos);
  }
}

TEST_CASE("direct sum") {
  const BiHomAlgebra h3 = fixture::h2_3();
  CHECK(direct_sum(h3, BiHomAlgebra::zero(0)) == h3);
  const BiHomAlgebra s = direct_sum(h3, h3);
  CHECK(s.dim == 4);
  CHECK(check_axioms(s).passes());
  const AxiomReport r = check_axioms(direct_sum(fixture::h2_1(), h3));
  CHECK_FALSE(r.bihom_associative.holds);
  CHECK(r.bihom_associative.at == std::vector<std::size_t>{0, 0, 0});
  const AxiomReport r2 = check_axioms(direct_sum(h3, fixture::h2_1()));
  CHECK(r2.bihom_associative.at == std::vector<std::size_t>{2, 2, 2});
}

TEST_CASE("unital extension") {
  BiHomAlgebra one = BiHomAlgebra::zero(1);
  const BiHomAlgebra e = unital_extension(one);
  REQUIRE(e.dim == 2);
  CHECK(check_axioms(e).passes());
  CHECK(check_axioms(e).unit_laws == UnitStatus::pass);
  // new basis vector last: u = e2, and e1 e1 = 0, so swapping gives Hu2_2
  const BiHomAlgebra hu2_2 =
      fixture::algebra({{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}}, fixture::id2, fixture::id2, vec({1, 0}));
  CHECK(transport(e, Matrix{{0, 1}, {1, 0}}) == hu2_2);

  const BiHomAlgebra z = unital_extension(BiHomAlgebra::zero(0));
  REQUIRE(z.dim == 1);
  CHECK(z.mul(0, 0, 0) == 1);
  CHECK(*z.unit == vec({1}));

  const BiHomAlgebra e13 = unital_extension(fixture::h2_13());
  CHECK(e13.dim == 3);
  CHECK(check_axioms(e13).passes());
  CHECK_THROWS_AS(unital_extension(fixture::h2_1()), PreconditionError);
}

TEST_CASE("untwist") {
  const UntwistResult r3 = untwist(fixture::h2_3());
  CHECK(r3.status == UntwistResult::Status::associative);
  CHECK(*r3.mul == fixture::h2_3().mul);

  const UntwistResult r13 = untwist(fixture::h2_13());
  REQUIRE(r13.status == UntwistResult::Status::associative);
  Tensor3 expected(2);
  expected(1, 1, 0) = 1;
  CHECK(*r13.mul == expected);

  BiHomAlgebra singular = fixture::h2_3();
  singular.alpha = Matrix{{1, 0}, {0, 0}};
  CHECK(untwist(singular).status == UntwistResult::Status::twists_not_invertible);
}

TEST_CASE("morphisms") {
  const BiHomAlgebra h3 = fixture::h2_3(), h6 = fixture::h2_6();
  CHECK(is_morphism(h3, h3, Matrix::identity(2)).holds);
  CHECK(is_morphism(h3, h6, Matrix{{0, 1}, {1, 0}}).holds);
  const MorphismCheck bad = is_morphism(h3, h6, Matrix::identity(2));
  CHECK_FALSE(bad.holds);
  CHECK(bad.identity == "phi(xy)=phi(x)phi(y)");

  const BiHomAlgebra u = fixture::hu2_4();
  const MorphismCheck z = is_morphism(u, u, Matrix(2, 2), true);
  CHECK_FALSE(z.holds);
  CHECK(z.identity == "phi(u_A)=u_B");
  CHECK(is_morphism(u, u, Matrix(2, 2)).holds);
}

TEST_CASE("subalgebras and the graph criterion") {
  const BiHomAlgebra h3 = fixture::h2_3(), h6 = fixture::h2_6();
  CHECK(is_subalgebra(h3, {vec({1, 0}), vec({0, 1})}).holds);
  const BiHomAlgebra s = direct_sum(h3, h6);
  CHECK(is_subalgebra(s, graph_basis(Matrix{{0, 1}, {1, 0}})).holds);
  // projection onto e1 is a morphism H2_3 -> H2_6, so its graph is closed
  CHECK(is_subalgebra(s, graph_basis(Matrix{{1, 0}, {0, 0}})).holds);
  CHECK_FALSE(is_morphism(h3, h6, Matrix{{0, 0}, {0, 1}}).holds);
  const SubalgebraCheck bad = is_subalgebra(s, graph_basis(Matrix{{0, 0}, {0, 1}}));
  CHECK_FALSE(bad.holds);
  CHECK(bad.closure == "product");
  CHECK_THROWS_AS(is_subalgebra(h3, {vec({1, 1}), vec({2, 2})}), std::invalid_argument);
}
