#pragma once

#include "bihom/multipoly.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace bihom {

enum class MonomialOrder { degrevlex, lex };

std::string order_name(MonomialOrder o);

/// -1, 0 or 1 as a is smaller than, equal to or greater than b.
int compare_monomials(const Exponents& a, const Exponents& b, MonomialOrder order);

/// Leading exponent of a nonzero polynomial.
Exponents leading_monomial(const MultiPoly& p, MonomialOrder order);
Rational leading_coefficient(const MultiPoly& p, MonomialOrder order);

/// Finite generating set over a fixed variable list. Each generator has a
/// label naming the identity it came from.
struct Ideal {
  std::vector<std::string> variables;
  std::vector<MultiPoly> generators;
  std::vector<std::string> labels;
  MonomialOrder order = MonomialOrder::degrevlex;

  Ideal() = default;
  explicit Ideal(std::vector<std::string> vars, MonomialOrder o = MonomialOrder::degrevlex)
      : variables(std::move(vars)), order(o) {}

  /// Appends p (re-expressed over `variables`) unless it is zero.
  void add(const MultiPoly& p, std::string label = {});
  std::size_t size() const { return generators.size(); }
};

struct GroebnerBasis {
  std::vector<std::string> variables;
  MonomialOrder order = MonomialOrder::degrevlex;
  /// Reduced, monic, sorted by increasing leading monomial.
  std::vector<MultiPoly> basis;
};

struct GroebnerOptions {
  /// Maximum number of elementary reduction steps.
  std::size_t max_steps = 1'000'000;
  /// Called with every completed basis (used by tests to audit all bases).
  std::function<void(const GroebnerBasis&)> on_basis;
};

struct GroebnerResult {
  enum class Status { complete, budget_exceeded };
  Status status = Status::complete;
  GroebnerBasis basis;
  std::size_t steps = 0;

  bool complete() const { return status == Status::complete; }
};

/// Buchberger's algorithm with normal pair selection (sugar tiebreak) and
/// the product and chain criteria.
GroebnerResult buchberger(const Ideal& ideal, const GroebnerOptions& options = {});

/// True iff the basis contains a nonzero constant.
bool ideal_is_trivial(const GroebnerBasis& g);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, MonomialOrder order);

/// Fully reduced remainder of f modulo the polynomials of g.
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& g, MonomialOrder order);

struct BasisAudit {
  bool s_polynomials_reduce = true;
  bool interreduced = true;
  bool monic = true;

  bool holds() const { return s_polynomials_reduce && interreduced && monic; }
};

/// Re-checks the reduced Groebner basis postconditions from scratch.
BasisAudit audit_basis(const GroebnerBasis& g);

}  // namespace bihom
