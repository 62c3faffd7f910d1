#include "bihom/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bihom {

std::string order_name(MonomialOrder o) { return o == MonomialOrder::lex ? "lex" : "degrevlex"; }

int compare_monomials(const Exponents& a, const Exponents& b, MonomialOrder order) {
  if (order == MonomialOrder::degrevlex) {
    std::uint64_t da = 0, db = 0;
    for (auto x : a) da += x;
    for (auto x : b) db += x;
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

Exponents leading_monomial(const MultiPoly& p, MonomialOrder order) {
  if (p.is_zero()) throw std::invalid_argument("leading monomial of zero polynomial");
  const Exponents* best = nullptr;
  for (const auto& [e, c] : p.terms())
    if (!best || compare_monomials(e, *best, order) > 0) best = &e;
  return *best;
}

Rational leading_coefficient(const MultiPoly& p, MonomialOrder order) {
  return p.terms().at(leading_monomial(p, order));
}

void Ideal::add(const MultiPoly& p, std::string label) {
  if (p.is_zero()) return;
  generators.push_back(p.over(variables));
  labels.push_back(std::move(label));
}

bool ideal_is_trivial(const GroebnerBasis& g) {
  return std::any_of(g.basis.begin(), g.basis.end(), [](const MultiPoly& p) { return p.is_nonzero_constant(); });
}

namespace {

struct Term {
  Exponents e;
  Rational c;
};

// Terms sorted by decreasing monomial.
struct Poly {
  std::vector<Term> t;
  std::uint64_t sugar = 0;
};

class Engine {
public:
  Engine(std::size_t nvars, MonomialOrder order, std::size_t max_steps)
      : nvars_(nvars), order_(order), max_steps_(max_steps) {}

  Poly convert(const MultiPoly& p) const {
    Poly out;
    for (const auto& [e, c] : p.terms()) out.t.push_back({e, c});
    sort_terms(out.t);
    out.sugar = p.total_degree();
    return out;
  }

  MultiPoly back(const Poly& p, const std::vector<std::string>& vars) const {
    MultiPoly out(vars);
    for (const auto& term : p.t) out.add_term(term.e, term.c);
    return out;
  }

  void sort_terms(std::vector<Term>& t) const {
    std::sort(t.begin(), t.end(), [this](const Term& a, const Term& b) { return cmp(a.e, b.e) > 0; });
  }

  int cmp(const Exponents& a, const Exponents& b) const { return compare_monomials(a, b, order_); }

  static bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  }
  static Exponents lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
  }
  static Exponents quotient(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
  }
  static std::uint64_t degree(const Exponents& e) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
  }

  static void make_monic(Poly& p) {
    if (p.t.empty() || p.t[0].c.is_one()) return;
    const Rational inv = p.t[0].c.inverse();
    for (auto& term : p.t) term.c *= inv;
  }

  // p - c * x^m * g, both sorted
  std::vector<Term> sub_mul(const std::vector<Term>& p, const Rational& c, const Exponents& m,
                            const std::vector<Term>& g) const {
    std::vector<Term> out;
    out.reserve(p.size() + g.size());
    std::size_t i = 0, j = 0;
    Exponents buf(nvars_);
    while (i < p.size() || j < g.size()) {
      if (j < g.size()) {
        for (std::size_t v = 0; v < nvars_; ++v) buf[v] = g[j].e[v] + m[v];
      }
      int s = i >= p.size() ? -1 : (j >= g.size() ? 1 : cmp(p[i].e, buf));
      if (s > 0) {
        out.push_back(p[i++]);
      } else if (s < 0) {
        out.push_back({buf, -(c * g[j].c)});
        ++j;
      } else {
        Rational v = p[i].c - c * g[j].c;
        if (!v.is_zero()) out.push_back({p[i].e, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  // Full reduction; returns false when the budget runs out.
  bool reduce(Poly& f, const std::vector<Poly>& g) {
    std::vector<Term> rest;
    std::vector<Term> p = std::move(f.t);
    while (!p.empty()) {
      const Poly* div = nullptr;
      for (const auto& h : g)
        if (!h.t.empty() && divides(h.t[0].e, p[0].e)) {
          div = &h;
          break;
        }
      if (!div) {
        rest.push_back(std::move(p[0]));
        p.erase(p.begin());
        continue;
      }
      if (++steps_ > max_steps_) return false;
      const Rational c = p[0].c / div->t[0].c;
      const Exponents m = quotient(p[0].e, div->t[0].e);
      f.sugar = std::max(f.sugar, div->sugar + degree(m));
      p = sub_mul(p, c, m, div->t);
    }
    f.t = std::move(rest);
    return true;
  }

  Poly spoly(const Poly& f, const Poly& g) const {
    const Exponents l = lcm(f.t[0].e, g.t[0].e);
    const Exponents mf = quotient(l, f.t[0].e);
    const Exponents mg = quotient(l, g.t[0].e);
    std::vector<Term> a;
    a.reserve(f.t.size());
    const Rational cf = f.t[0].c.inverse();
    for (const auto& term : f.t) {
      Exponents e(nvars_);
      for (std::size_t v = 0; v < nvars_; ++v) e[v] = term.e[v] + mf[v];
      a.push_back({std::move(e), term.c * cf});
    }
    Poly s;
    s.t = sub_mul(a, g.t[0].c.inverse(), mg, g.t);
    s.sugar = std::max(f.sugar + degree(mf), g.sugar + degree(mg));
    return s;
  }

  std::size_t steps() const { return steps_; }

private:
  std::size_t nvars_;
  MonomialOrder order_;
  std::size_t max_steps_;
  std::size_t steps_ = 0;
};

}  // namespace

GroebnerResult buchberger(const Ideal& ideal, const GroebnerOptions& options) {
  const std::size_t nv = ideal.variables.size();
  Engine eng(nv, ideal.order, options.max_steps);
  GroebnerResult res;
  res.basis.variables = ideal.variables;
  res.basis.order = ideal.order;

  auto finish_trivial = [&] {
    res.basis.basis = {MultiPoly::constant(ideal.variables, 1)};
    res.steps = eng.steps();
    if (options.on_basis) options.on_basis(res.basis);
    return res;
  };
  auto exhausted = [&] {
    res.status = GroebnerResult::Status::budget_exceeded;
    res.basis.basis.clear();
    res.steps = eng.steps();
    return res;
  };

  std::vector<Poly> g;
  for (const auto& gen : ideal.generators) {
    Poly p = eng.convert(gen.over(ideal.variables));
    if (!eng.reduce(p, g)) return exhausted();
    if (p.t.empty()) continue;
    Engine::make_monic(p);
    if (Engine::degree(p.t[0].e) == 0) return finish_trivial();
    g.push_back(std::move(p));
  }

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pending.empty()) {
    // normal strategy: smallest lcm, then smallest sugar, then indices
    auto best = pending.begin();
    Exponents best_lcm = Engine::lcm(g[best->first].t[0].e, g[best->second].t[0].e);
    std::uint64_t best_sugar = 0;
    {
      const auto& [i, j] = *best;
      best_sugar = std::max(g[i].sugar + Engine::degree(Engine::quotient(best_lcm, g[i].t[0].e)),
                            g[j].sugar + Engine::degree(Engine::quotient(best_lcm, g[j].t[0].e)));
    }
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      const auto& [i, j] = *it;
      Exponents l = Engine::lcm(g[i].t[0].e, g[j].t[0].e);
      const int c = eng.cmp(l, best_lcm);
      if (c > 0) continue;
      std::uint64_t s = std::max(g[i].sugar + Engine::degree(Engine::quotient(l, g[i].t[0].e)),
                                 g[j].sugar + Engine::degree(Engine::quotient(l, g[j].t[0].e)));
      if (c < 0 || s < best_sugar) {
        best = it;
        best_lcm = std::move(l);
        best_sugar = s;
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);

    const Exponents& li = g[i].t[0].e;
    const Exponents& lj = g[j].t[0].e;
    bool coprime = true;
    for (std::size_t v = 0; v < nv; ++v)
      if (li[v] && lj[v]) coprime = false;
    if (coprime) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (Engine::divides(g[k].t[0].e, best_lcm) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
    }
    if (chain) continue;

    Poly s = eng.spoly(g[i], g[j]);
    if (!eng.reduce(s, g)) return exhausted();
    if (s.t.empty()) continue;
    Engine::make_monic(s);
    if (Engine::degree(s.t[0].e) == 0) return finish_trivial();
    const std::size_t k = g.size();
    g.push_back(std::move(s));
    for (std::size_t m = 0; m < k; ++m) pending.insert({m, k});
  }

  // minimal basis: drop elements whose leading monomial is divisible by another's
  std::vector<Poly> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool drop = false;
    for (std::size_t b = 0; b < g.size() && !drop; ++b) {
      if (a == b || !Engine::divides(g[b].t[0].e, g[a].t[0].e)) continue;
      if (g[b].t[0].e != g[a].t[0].e || b < a) drop = true;
    }
    if (!drop) minimal.push_back(g[a]);
  }
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Poly> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    Poly head;
    head.t.push_back(minimal[a].t[0]);
    Poly tail;
    tail.t.assign(minimal[a].t.begin() + 1, minimal[a].t.end());
    if (!eng.reduce(tail, others)) return exhausted();
    head.t.insert(head.t.end(), tail.t.begin(), tail.t.end());
    head.sugar = minimal[a].sugar;
    Engine::make_monic(head);
    minimal[a] = std::move(head);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Poly& x, const Poly& y) { return eng.cmp(x.t[0].e, y.t[0].e) < 0; });
  for (const auto& p : minimal) res.basis.basis.push_back(eng.back(p, ideal.variables));
  res.steps = eng.steps();
  if (options.on_basis) options.on_basis(res.basis);
  return res;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, MonomialOrder order) {
  const auto vars = union_variables(f.variables(), g.variables());
  Engine eng(vars.size(), order, static_cast<std::size_t>(-1));
  return eng.back(eng.spoly(eng.convert(f.over(vars)), eng.convert(g.over(vars))), vars);
}

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& g, MonomialOrder order) {
  auto vars = f.variables();
  for (const auto& h : g) vars = union_variables(vars, h.variables());
  Engine eng(vars.size(), order, static_cast<std::size_t>(-1));
  std::vector<Poly> gs;
  for (const auto& h : g)
    if (!h.is_zero()) gs.push_back(eng.convert(h.over(vars)));
  Poly p = eng.convert(f.over(vars));
  eng.reduce(p, gs);
  return eng.back(p, vars);
}

BasisAudit audit_basis(const GroebnerBasis& gb) {
  BasisAudit a;
  const auto& b = gb.basis;
  for (const auto& p : b)
    if (p.is_zero() || !leading_coefficient(p, gb.order).is_one()) a.monic = false;
  if (!a.monic) return a;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Exponents li = leading_monomial(b[i], gb.order);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (i == j) continue;
      for (const auto& [e, c] : b[j].terms()) {
        bool divides = true;
        for (std::size_t v = 0; v < e.size(); ++v)
          if (li[v] > e[v]) divides = false;
        if (divides) a.interreduced = false;
      }
    }
  }
  for (std::size_t i = 0; i < b.size() && a.s_polynomials_reduce; ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!normal_form(s_polynomial(b[i], b[j], gb.order), b, gb.order).is_zero()) {
        a.s_polynomials_reduce = false;
        break;
      }
  return a;
}

}  // namespace bihom
