#include "bihom/matrix.hpp"
#include "bihom/multipoly.hpp"
#include "bihom/upoly.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace bihom;

TEST_CASE("rationals stay reduced with positive denominators") {
  const Rational r(6, -4);
  CHECK(r.str() == "-3/2");
  CHECK(r.denominator() == 2);
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(0, 5).denominator() == 1);
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7").str() == "-7");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(-3, 2).mod(5) == 1);
}

TEST_CASE("determinant") {
  CHECK(det(Matrix::identity(2)) == 1);
  CHECK(det(Matrix{{0, 1}, {1, 0}}) == -1);
  CHECK(det(Matrix{{1, 1}, {0, 1}}) == 1);
  CHECK(det(Matrix{{2, 3, 1}, {0, 1, 4}, {5, 6, 0}}) == 7);
  CHECK(det(Matrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == -1);
  CHECK_THROWS_AS(det(Matrix(2, 3)), ShapeError);
}

TEST_CASE("inverse") {
  CHECK(*inverse(Matrix::identity(3)) == Matrix::identity(3));
  CHECK(*inverse(Matrix{{1, 1}, {0, 1}}) == Matrix{{1, -1}, {0, 1}});
  CHECK_FALSE(inverse(Matrix{{1, 1}, {1, 1}}).has_value());
  CHECK(*inverse(Matrix{{0, 2}, {1, 0}}) == Matrix{{0, 1}, {Rational(1, 2), 0}});
  CHECK_THROWS_AS(inverse(Matrix(3, 2)), ShapeError);
}

TEST_CASE("invariant factors of xI - m") {
  auto strs = [](const std::vector<UPoly>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.str());
    return out;
  };
  const UPoly xm1 = UPoly::linear(1);
  CHECK(invariant_factors(Matrix::identity(2)) == std::vector<UPoly>{xm1, xm1});
  CHECK(invariant_factors(Matrix{{1, 1}, {0, 1}}) == std::vector<UPoly>{xm1 * xm1});
  CHECK(invariant_factors(Matrix{{0, 1}, {1, 0}}) == std::vector<UPoly>{UPoly({-1, 0, 1})});
  CHECK(strs(invariant_factors(Matrix{{1, 1}, {0, 1}})) == std::vector<std::string>{"x^2 - 2*x + 1"});
  CHECK(invariant_factors(Matrix(2, 2)) == std::vector<UPoly>{UPoly::x(), UPoly::x()});
  // diag(1, 1, 2): factors (x-1) | (x-1)(x-2)
  CHECK(invariant_factors(Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}) ==
        std::vector<UPoly>{xm1, xm1 * UPoly::linear(2)});
}

TEST_CASE("multivariate polynomial arithmetic") {
  const std::vector<std::string> xy = {"x", "y"};
  const MultiPoly x = MultiPoly::variable(xy, "x");
  const MultiPoly y = MultiPoly::variable(xy, "y");
  const MultiPoly one = MultiPoly::constant(xy, 1);
  CHECK((x + y) + (x - y) == Rational(2) * x);
  CHECK((x + one) * (x - one) == MultiPoly::parse("x^2 - 1", xy));
  const MultiPoly zero = x * MultiPoly(xy);
  CHECK(zero.is_zero());
  CHECK(zero.terms().empty());
  CHECK(MultiPoly::parse("x^2*y - 3/2*y + 1", xy).evaluate({Rational(2), Rational(2)}) == 6);
  CHECK((x - x).terms().empty());
}

TEST_CASE("multivariate polynomials over different variable lists extend to the union") {
  const MultiPoly x = MultiPoly::variable({"x"}, "x");
  const MultiPoly z = MultiPoly::variable({"z"}, "z");
  const MultiPoly s = x + z;
  CHECK(s.variables() == std::vector<std::string>{"x", "z"});
  CHECK(s.evaluate({Rational(1), Rational(2)}) == 3);
}

TEST_CASE("linear solving") {
  const Matrix m{{1, 2}, {2, 4}};
  CHECK(rank(m) == 1);
  CHECK(nullspace(m).size() == 1);
  const auto sol = solve(m, {Rational(3), Rational(6)});
  REQUIRE(sol.has_value());
  CHECK(sol->free_count == 1);
  CHECK(sol->particular == Vec{Rational(3), Rational(0)});
  CHECK_FALSE(solve(m, {Rational(3), Rational(5)}).has_value());
}

TEST_CASE("property: determinant is multiplicative and inverse is exact") {
  fixture::Gen gen(1001);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + gen.index(4);
    const Matrix a = gen.matrix(n), b = gen.matrix(n);
    CHECK(det(a * b) == det(a) * det(b));
    if (auto inv = inverse(a)) {
      CHECK(a * *inv == Matrix::identity(n));
      CHECK(*inv * a == Matrix::identity(n));
    } else {
      CHECK(det(a).is_zero());
    }
  }
}

TEST_CASE("property: invariant factors are a similarity invariant and multiply to the characteristic polynomial") {
  fixture::Gen gen(1002);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + gen.index(3);
    const Matrix m = gen.matrix(n, -2, 2);
    const Matrix p = gen.invertible(n);
    const auto f = invariant_factors(m);
    CHECK(invariant_factors(p * m * *inverse(p)) == f);
    UPoly prod = UPoly::constant(1);
    for (std::size_t i = 0; i < f.size(); ++i) {
      prod = prod * f[i];
      if (i + 1 < f.size()) CHECK(f[i + 1].divmod(f[i]).second.is_zero());
    }
    CHECK(prod.degree() == static_cast<int>(n));
    // x = 0 gives det(-m)
    const Rational sign = n % 2 ? Rational(-1) : Rational(1);
    CHECK(prod.eval(0) == sign * det(m));
  }
}

TEST_CASE("property: polynomial ring laws") {
  fixture::Gen gen(1003);
  const std::vector<std::string> vars = {"x", "y", "z"};
  auto random_poly = [&] {
    MultiPoly p(vars);
    const int terms = gen.integer(0, 4);
    for (int t = 0; t < terms; ++t)
      p.add_term({static_cast<std::uint32_t>(gen.integer(0, 2)), static_cast<std::uint32_t>(gen.integer(0, 2)),
                  static_cast<std::uint32_t>(gen.integer(0, 2))},
                 gen.integer(-3, 3));
    return p;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly f = random_poly(), g = random_poly(), h = random_poly();
    CHECK((f + g) + h == f + (g + h));
    CHECK(f + g == g + f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
    const MultiPoly fg = f * g;
    for (const auto& [e, c] : fg.terms()) CHECK_FALSE(c.is_zero());
  }
}
