#include "bihom/polysys.hpp"

#include <algorithm>
#include <numeric>

namespace bihom {

namespace {

std::string idx(std::initializer_list<std::size_t> is) {
  std::string s;
  for (auto i : is) {
    if (!s.empty()) s += ',';
    s += std::to_string(i + 1);
  }
  return s;
}

std::string var_name(char prefix, std::initializer_list<std::size_t> is) {
  std::string s(1, prefix);
  for (auto i : is) s += "_" + std::to_string(i + 1);
  return s;
}

// n x n grid of polynomials
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

}  // namespace

Ideal gen_variety_system(std::size_t n, VarietyMask mask, const std::optional<BiHomAlgebra>& fixed,
                         const std::optional<Vec>& unit) {
  if ((!mask.mul || !mask.alpha || !mask.beta) && !fixed)
    throw std::invalid_argument("gen_variety_system: non-symbolic parts need a fixed algebra");
  if (fixed && fixed->dim != n) throw ShapeError("gen_variety_system: fixed algebra has wrong dimension");
  if (unit && unit->size() != n) throw ShapeError("gen_variety_system: unit has wrong length");

  std::vector<std::string> vars;
  if (mask.mul)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) vars.push_back(var_name('c', {i, j, k}));
  if (mask.alpha)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) vars.push_back(var_name('a', {j, i}));
  if (mask.beta)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) vars.push_back(var_name('b', {j, i}));

  auto sym = [&](char prefix, std::initializer_list<std::size_t> is) { return MultiPoly::variable(vars, var_name(prefix, is)); };
  auto cst = [&](const Rational& r) { return MultiPoly::constant(vars, r); };

  std::vector<MultiPoly> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        c[(i * n + j) * n + k] = mask.mul ? sym('c', {i, j, k}) : cst(fixed->mul(i, j, k));
  auto C = [&](std::size_t i, std::size_t j, std::size_t k) -> const MultiPoly& { return c[(i * n + j) * n + k]; };
  PolyMatrix A(n, std::vector<MultiPoly>(n)), B(n, std::vector<MultiPoly>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      A[j][i] = mask.alpha ? sym('a', {j, i}) : cst(fixed->alpha(j, i));
      B[j][i] = mask.beta ? sym('b', {j, i}) : cst(fixed->beta(j, i));
    }

  Ideal ideal(vars);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t r = 0; r < n; ++r) {
          MultiPoly lhs(vars), rhs(vars);
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
              lhs += A[p][i] * C(j, k, q) * C(p, q, r);
              rhs += C(i, j, p) * B[q][k] * C(p, q, r);
            }
          ideal.add(lhs - rhs, "assoc(" + idx({i, j, k}) + ";" + idx({r}) + ")");
        }
  for (const auto& [M, name] : {std::pair<const PolyMatrix*, const char*>{&A, "alpha_mult"}, {&B, "beta_mult"}})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t r = 0; r < n; ++r) {
          MultiPoly lhs(vars), rhs(vars);
          for (std::size_t p = 0; p < n; ++p) {
            lhs += C(i, j, p) * (*M)[r][p];
            for (std::size_t q = 0; q < n; ++q) rhs += (*M)[p][i] * (*M)[q][j] * C(p, q, r);
          }
          ideal.add(lhs - rhs, std::string(name) + "(" + idx({i, j}) + ";" + idx({r}) + ")");
        }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t q = 0; q < n; ++q) {
      MultiPoly g(vars);
      for (std::size_t m = 0; m < n; ++m) g += A[r][m] * B[m][q] - B[r][m] * A[m][q];
      ideal.add(g, "commute(" + idx({r, q}) + ")");
    }
  if (unit) {
    const Vec& u = *unit;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r = 0; r < n; ++r) {
        MultiPoly right = -A[r][i], left = -B[r][i];
        for (std::size_t j = 0; j < n; ++j) {
          right += u[j] * C(i, j, r);
          left += u[j] * C(j, i, r);
        }
        ideal.add(right, "unit_right(" + idx({i}) + ";" + idx({r}) + ")");
        ideal.add(left, "unit_left(" + idx({i}) + ";" + idx({r}) + ")");
      }
    for (std::size_t r = 0; r < n; ++r) {
      MultiPoly ga = cst(-u[r]), gb = cst(-u[r]);
      for (std::size_t j = 0; j < n; ++j) {
        ga += u[j] * A[r][j];
        gb += u[j] * B[r][j];
      }
      ideal.add(ga, "alpha_unit(" + idx({r}) + ")");
      ideal.add(gb, "beta_unit(" + idx({r}) + ")");
    }
  }
  return ideal;
}

std::vector<Rational> variety_point(const Ideal& system, const BiHomAlgebra& a) {
  a.validate();
  const std::size_t n = a.dim;
  std::vector<Rational> point(system.variables.size());
  for (std::size_t v = 0; v < system.variables.size(); ++v) {
    const std::string& name = system.variables[v];
    std::vector<std::size_t> is;
    std::size_t pos = 1;
    while (pos < name.size() && name[pos] == '_') {
      std::size_t end = name.find('_', pos + 1);
      if (end == std::string::npos) end = name.size();
      is.push_back(std::stoul(name.substr(pos + 1, end - pos - 1)) - 1);
      pos = end;
    }
    auto in_range = [&] { return std::all_of(is.begin(), is.end(), [n](std::size_t x) { return x < n; }); };
    if (name[0] == 'c' && is.size() == 3 && in_range()) {
      point[v] = a.mul(is[0], is[1], is[2]);
    } else if ((name[0] == 'a' || name[0] == 'b') && is.size() == 2 && in_range()) {
      point[v] = name[0] == 'a' ? a.alpha(is[0], is[1]) : a.beta(is[0], is[1]);
    } else {
      throw std::invalid_argument("variety_point: unexpected variable '" + name + "'");
    }
  }
  return point;
}

std::optional<std::size_t> first_nonvanishing(const Ideal& system, const std::vector<Rational>& point) {
  for (std::size_t g = 0; g < system.generators.size(); ++g)
    if (!system.generators[g].evaluate(point).is_zero()) return g;
  return std::nullopt;
}

namespace {

MultiPoly symbolic_det(const PolyMatrix& d, const std::vector<std::string>& vars) {
  const std::size_t n = d.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly out(vars);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    MultiPoly term = MultiPoly::constant(vars, inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term = term * d[i][perm[i]];
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

Ideal gen_iso_system(const BiHomAlgebra& a, const BiHomAlgebra& b) {
  a.validate();
  b.validate();
  if (a.dim != b.dim) throw ShapeError("gen_iso_system: dimensions differ");
  const std::size_t n = a.dim;
  std::vector<std::string> vars;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) vars.push_back(var_name('d', {p, q}));
  vars.push_back("t");
  PolyMatrix d(n, std::vector<MultiPoly>(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) d[p][q] = MultiPoly::variable(vars, p * n + q);

  Ideal ideal(vars);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) {
        MultiPoly g(vars);
        for (std::size_t k = 0; k < n; ++k)
          if (!a.mul(i, j, k).is_zero()) g += a.mul(i, j, k) * d[r][k];
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q)
            if (!b.mul(p, q, r).is_zero()) g -= b.mul(p, q, r) * (d[p][i] * d[q][j]);
        ideal.add(g, "hom(" + idx({i, j}) + ";" + idx({r}) + ")");
      }
  for (const auto& [ma, mb, name] : {std::tuple<const Matrix*, const Matrix*, const char*>{&a.alpha, &b.alpha, "alpha"},
                                     {&a.beta, &b.beta, "beta"}})
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t q = 0; q < n; ++q) {
        MultiPoly g(vars);
        for (std::size_t m = 0; m < n; ++m) {
          if (!(*mb)(r, m).is_zero()) g += (*mb)(r, m) * d[m][q];
          if (!(*ma)(m, q).is_zero()) g -= (*ma)(m, q) * d[r][m];
        }
        ideal.add(g, std::string(name) + "(" + idx({r, q}) + ")");
      }
  MultiPoly det_t = symbolic_det(d, vars) * MultiPoly::variable(vars, n * n) - MultiPoly::constant(vars, 1);
  ideal.add(det_t, "det*t-1");
  return ideal;
}

Ideal gen_stabilizer_system(const BiHomAlgebra& a) { return gen_iso_system(a, a); }

std::vector<Rational> iso_point(const Matrix& phi) {
  const Rational dt = det(phi);
  if (dt.is_zero()) throw PreconditionError("iso_point: phi is singular");
  std::vector<Rational> pt(phi.entries());
  pt.push_back(dt.inverse());
  return pt;
}

Matrix iso_matrix(const std::vector<Rational>& point, std::size_t n) {
  if (point.size() < n * n) throw ShapeError("iso_matrix: point too short");
  return Matrix(n, n, std::vector<Rational>(point.begin(), point.begin() + static_cast<std::ptrdiff_t>(n * n)));
}

}  // namespace bihom
