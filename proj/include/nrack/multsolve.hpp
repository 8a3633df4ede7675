#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nrack/intmat.hpp"
#include "nrack/monomial.hpp"

namespace nrack {

// prod_i u_i^(exps[i]) = rhs; rhs may involve external symbols but no unknown.
struct MultRow {
  IntVec exps;
  Monomial rhs;
};

struct MultSystem {
  std::vector<std::string> unknowns;
  std::vector<MultRow> rows;
};

struct SolveOptions {
  long max_denominator = 0;  // 0: no cap
  std::string torsion_prefix = "eps";
};

struct SolutionFamily {
  std::vector<std::string> unknowns;

  // Relation view: unknowns without a unit pivot stay as parameters; the others are
  // monomials in them. `conditions` (each = 1) are the leftover relations among parameters.
  std::vector<std::string> parameters;
  std::vector<std::string> dependent;
  std::vector<Monomial> expr;
  std::vector<Monomial> conditions;

  // Resolved view: every unknown in terms of independent parameters, fresh torsion symbols
  // and external symbols. Only conditions on external symbols remain.
  std::vector<std::string> free_params;
  SymbolTable torsion;
  std::vector<Monomial> resolved;
  std::vector<Monomial> external_conditions;

  // Invariants of the exponent matrix: u -> u^A has kernel (k^x)^free_rank x prod Z/d.
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion_orders;

  std::size_t index_of(const std::string& unknown) const;
};

struct Inconsistency {
  IntVec combination;  // over the input rows; empty when torsion orders are also needed
  Monomial value;      // the combination forces value = 1, which is false
  std::string message;
};

using SolveResult = std::variant<SolutionFamily, Inconsistency>;

SolveResult solve(const MultSystem& sys, const SolveOptions& opt = {});

// lhs(values) / rhs for one row.
Monomial substitute_row(const MultRow& row, const std::vector<Monomial>& values);

// Lattice of multiplicative consequences of {c = 1}, torsion orders and exp(2 pi i) = 1.
class ConditionLattice {
 public:
  explicit ConditionLattice(std::vector<Monomial> conditions);
  bool implies(const Monomial& m) const;  // m = 1 follows
  bool consistent() const;
  // Reduced generating set (identity-free).
  std::vector<Monomial> simplified() const;

 private:
  std::vector<Monomial> conds_;
  std::vector<Monomial> basis_;
  bool consistent_ = true;
};

}  // namespace nrack
