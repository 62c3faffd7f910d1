#include "bihom/enumerate.hpp"

#include <cmath>

namespace bihom {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

struct ModTerm {
  std::uint64_t coeff;
  std::vector<std::pair<std::size_t, std::uint32_t>> powers;
};

}  // namespace

std::vector<std::vector<std::uint64_t>> enumerate_points_mod_p(const Ideal& ideal, std::uint64_t p, double cap) {
  if (!is_prime(p)) throw std::invalid_argument("enumerate_points_mod_p: modulus is not prime");
  if (p > (1u << 20)) throw std::invalid_argument("enumerate_points_mod_p: modulus too large");
  const std::size_t nv = ideal.variables.size();
  const double size = std::pow(static_cast<double>(p), static_cast<double>(nv));
  if (size > cap)
    throw SearchRefused("search space p^" + std::to_string(nv) + " exceeds the cap", size);

  // generators grouped by the last variable they mention, checked once it is assigned
  std::vector<std::vector<std::vector<ModTerm>>> by_depth(nv + 1);
  for (const auto& g : ideal.generators) {
    std::vector<ModTerm> terms;
    std::size_t depth = 0;
    const MultiPoly h = g.over(ideal.variables);
    for (const auto& [e, c] : h.terms()) {
      ModTerm t{c.mod(p), {}};
      for (std::size_t v = 0; v < e.size(); ++v)
        if (e[v]) {
          t.powers.push_back({v, e[v]});
          depth = std::max(depth, v + 1);
        }
      terms.push_back(std::move(t));
    }
    by_depth[depth].push_back(std::move(terms));
  }
  auto vanishes = [p](const std::vector<ModTerm>& g, const std::vector<std::uint64_t>& x) {
    std::uint64_t acc = 0;
    for (const auto& t : g) {
      std::uint64_t v = t.coeff;
      for (const auto& [var, k] : t.powers)
        for (std::uint32_t i = 0; i < k; ++i) v = v * x[var] % p;
      acc = (acc + v) % p;
    }
    return acc == 0;
  };

  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& g : by_depth[0])
    if (!vanishes(g, {})) return out;
  std::vector<std::uint64_t> x(nv, 0);
  if (nv == 0) {
    out.push_back({});
    return out;
  }
  std::size_t depth = 0;
  // iterative depth-first search over assignments
  std::vector<std::uint64_t> next(nv, 0);
  while (true) {
    if (next[depth] == p) {
      if (depth == 0) break;
      next[depth] = 0;
      --depth;
      continue;
    }
    x[depth] = next[depth]++;
    bool ok = true;
    for (const auto& g : by_depth[depth + 1])
      if (!vanishes(g, x)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    if (depth + 1 == nv) {
      out.push_back(x);
    } else {
      ++depth;
    }
  }
  return out;
}

namespace {

std::size_t grid_nonzero(const std::vector<Rational>& grid) {
  std::size_t k = 0;
  for (const auto& g : grid)
    if (!g.is_zero()) ++k;
  return k;
}

bool grid_has_zero(const std::vector<Rational>& grid) {
  for (const auto& g : grid)
    if (g.is_zero()) return true;
  return false;
}

// Vectors of length m over the grid with at most `sparsity` nonzero entries, in grid order.
void candidate_vectors(const std::vector<Rational>& grid, std::size_t m, std::size_t sparsity, Vec& cur,
                       std::size_t nonzero, std::vector<Vec>& out) {
  if (cur.size() == m) {
    out.push_back(cur);
    return;
  }
  for (const auto& g : grid) {
    const std::size_t nz = nonzero + (g.is_zero() ? 0 : 1);
    if (nz > sparsity) continue;
    cur.push_back(g);
    candidate_vectors(grid, m, sparsity, cur, nz, out);
    cur.pop_back();
  }
}

double vectors_count(const std::vector<Rational>& grid, std::size_t m, std::size_t sparsity) {
  const double nz = static_cast<double>(grid_nonzero(grid));
  const bool zero = grid_has_zero(grid);
  double total = 0, binom = 1;
  for (std::size_t s = 0; s <= m; ++s) {
    if (s > 0) binom = binom * static_cast<double>(m - s + 1) / static_cast<double>(s);
    if (s > sparsity) break;
    if (!zero && s < m) continue;
    total += binom * std::pow(nz, static_cast<double>(s));
  }
  return total;
}

std::optional<Vec> canonical_counit(const BiHomAlgebra& a, const BiHomCoalgebra& c) {
  const std::size_t n = a.dim;
  const Matrix* fixers[] = {&c.psi, &c.omega, &a.alpha, &a.beta};
  const std::size_t rows = 2 * n * n + 4 * n + (a.unit ? 1 : 0);
  Matrix m(rows, n);
  Vec rhs = zero_vec(rows);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        m(i * n + j, k) += c.comul(i, j, k);
        m(n * n + i * n + j, k) += c.comul(i, k, j);
      }
      rhs[i * n + j] = c.omega(j, i);
      rhs[n * n + i * n + j] = c.psi(j, i);
    }
  std::size_t base = 2 * n * n;
  for (const Matrix* f : fixers) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) m(base + i, k) += (*f)(k, i);
      m(base + i, i) -= 1;
    }
    base += n;
  }
  if (a.unit) {
    for (std::size_t k = 0; k < n; ++k) m(base, k) = (*a.unit)[k];
    rhs[base] = 1;
  }
  auto sol = solve(m, rhs);
  if (!sol) return std::nullopt;
  return sol->particular;
}

}  // namespace

double comultiplication_search_size(std::size_t n, const ComulSearchOptions& options) {
  return std::pow(vectors_count(options.grid, n * n, options.sparsity), static_cast<double>(n));
}

std::vector<BiHomBialgebra> enumerate_comultiplications(const BiHomAlgebra& a, const Matrix& psi, const Matrix& omega,
                                                        const ComulSearchOptions& options) {
  a.validate();
  const std::size_t n = a.dim;
  if (psi.rows() != n || psi.cols() != n || omega.rows() != n || omega.cols() != n)
    throw ShapeError("enumerate_comultiplications: twist shape mismatch");
  const double size = comultiplication_search_size(n, options);
  if (size > options.cap)
    throw SearchRefused("comultiplication search space of " + std::to_string(static_cast<long double>(size)) +
                            " candidates exceeds the cap",
                        size);

  std::vector<BiHomBialgebra> found;
  // Delta-independent parts of the compatibility conditions
  {
    BiHomBialgebra probe{a, BiHomCoalgebra::zero(n)};
    probe.coa.psi = psi;
    probe.coa.omega = omega;
    const CompatibilityReport r = check_compatibility(probe);
    if (!r.algebra.passes() || !r.coalgebra.twists_commute.holds || !r.alpha_psi_commute.holds ||
        !r.alpha_omega_commute.holds || !r.beta_psi_commute.holds || !r.beta_omega_commute.holds ||
        !r.psi_multiplicative.holds || !r.omega_multiplicative.holds)
      return found;
  }

  std::vector<Vec> rows;
  Vec cur;
  candidate_vectors(options.grid, n * n, options.sparsity, cur, 0, rows);
  std::vector<std::size_t> digit(n, 0);
  if (n == 0) return found;
  while (true) {
    BiHomBialgebra b{a, BiHomCoalgebra::zero(n)};
    b.coa.psi = psi;
    b.coa.omega = omega;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t jk = 0; jk < n * n; ++jk) b.coa.comul(i, jk / n, jk % n) = rows[digit[i]][jk];
    bool keep = check_coalgebra_axioms(b.coa).passes();
    if (keep) {
      if (options.counital) {
        auto eps = canonical_counit(a, b.coa);
        if (eps)
          b.coa.counit = std::move(eps);
        else
          keep = false;
      }
    }
    if (keep && check_compatibility(b).passes())
      found.push_back(std::move(b));

    std::size_t pos = n;
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < rows.size()) {
        done = false;
        break;
      }
      digit[pos] = 0;
    }
    if (done) break;
  }
  return found;
}

}  // namespace bihom
